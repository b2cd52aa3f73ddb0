#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ncc/errors.hpp"
#include "ncc/rational.hpp"

namespace ncc {

enum class PartitionFamily { all, noncrossing, interval, irreducible_nc };
enum class PartitionOrder { refinement, minmax };

inline std::string_view to_string(PartitionFamily f) {
  switch (f) {
    case PartitionFamily::all: return "all";
    case PartitionFamily::noncrossing: return "noncrossing";
    case PartitionFamily::interval: return "interval";
    case PartitionFamily::irreducible_nc: return "irreducible_nc";
  }
  return "?";
}

inline PartitionFamily parse_partition_family(std::string_view s) {
  if (s == "all") return PartitionFamily::all;
  if (s == "noncrossing" || s == "nc") return PartitionFamily::noncrossing;
  if (s == "interval") return PartitionFamily::interval;
  if (s == "irreducible_nc" || s == "irreducible") return PartitionFamily::irreducible_nc;
  throw DomainError("unknown partition family '" + std::string(s) + "'");
}

/// Set partition of [n] = {1, ..., n}.
///
/// Stored as a restricted growth string: labels()[i] is the index of the block
/// containing element i + 1, and blocks are numbered in order of their minimum
/// element. Two partitions are equal iff their label strings are.
class Partition {
 public:
  /// Blocks may be given in any order, elements within a block in any order.
  Partition(int n, const std::vector<std::vector<int>>& blocks) {
    if (n < 1) throw DomainError("partition ground set must be non-empty");
    std::vector<int> labels(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw DomainError("partition block is empty");
      for (int x : blocks[b]) {
        if (x < 1 || x > n) throw DomainError("partition element out of range");
        if (labels[x - 1] != -1) throw DomainError("partition blocks are not disjoint");
        labels[x - 1] = static_cast<int>(b);
      }
    }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end())
      throw DomainError("partition blocks do not cover [n]");
    assign_labels(labels);
  }

  /// labels[i] is an arbitrary block tag for element i + 1.
  static Partition from_labels(const std::vector<int>& labels) {
    if (labels.empty()) throw DomainError("partition ground set must be non-empty");
    Partition p;
    p.assign_labels(labels);
    return p;
  }

  /// 0_n, all singletons.
  static Partition finest(int n) {
    std::vector<int> l(n);
    std::iota(l.begin(), l.end(), 0);
    return from_labels(l);
  }
  /// 1_n, a single block.
  static Partition coarsest(int n) { return from_labels(std::vector<int>(n, 0)); }

  int size() const { return static_cast<int>(labels_.size()); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& labels() const { return labels_; }
  /// Block index of a 1-based element.
  int block_of(int element) const { return labels_.at(element - 1); }

  bool is_noncrossing() const {
    // Between two consecutive elements i < j of a block, every other block
    // must lie strictly inside (i, j).
    for (const auto& block : blocks_) {
      for (std::size_t t = 0; t + 1 < block.size(); ++t) {
        int i = block[t], j = block[t + 1];
        for (int k = i + 1; k < j; ++k) {
          const auto& other = blocks_[labels_[k - 1]];
          if (other.front() < i || other.back() > j) return false;
        }
      }
    }
    return true;
  }

  bool is_interval() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& b) {
      return b.back() - b.front() + 1 == static_cast<int>(b.size());
    });
  }

  /// 1 and n share a block.
  bool is_irreducible() const { return labels_.front() == labels_.back(); }

  bool in_family(PartitionFamily f) const {
    switch (f) {
      case PartitionFamily::all: return true;
      case PartitionFamily::noncrossing: return is_noncrossing();
      case PartitionFamily::interval: return is_interval();
      case PartitionFamily::irreducible_nc: return is_irreducible() && is_noncrossing();
    }
    return false;
  }

  /// Restricted growth string, usable as a hash key.
  std::string key() const {
    std::string k;
    k.reserve(labels_.size());
    for (int l : labels_) k.push_back(static_cast<char>('a' + l));
    return k;
  }

  /// "{{1,3},{2}}"
  std::string to_string() const {
    std::string out = "{";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (b) out += ",";
      out += "{";
      for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
        if (i) out += ",";
        out += std::to_string(blocks_[b][i]);
      }
      out += "}";
    }
    return out + "}";
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.labels_ == b.labels_; }
  friend auto operator<=>(const Partition& a, const Partition& b) {
    if (a.labels_.size() != b.labels_.size()) return a.labels_.size() <=> b.labels_.size();
    return a.labels_ <=> b.labels_;
  }

 private:
  Partition() = default;

  void assign_labels(const std::vector<int>& raw) {
    std::map<int, int> relabel;
    labels_.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto [it, fresh] = relabel.try_emplace(raw[i], static_cast<int>(relabel.size()));
      labels_[i] = it->second;
    }
    blocks_.assign(relabel.size(), {});
    for (std::size_t i = 0; i < labels_.size(); ++i) blocks_[labels_[i]].push_back(static_cast<int>(i) + 1);
  }

  std::vector<int> labels_;
  std::vector<std::vector<int>> blocks_;
};

namespace detail {
inline std::atomic<int>& partition_size_limit() {
  static std::atomic<int> limit{10};
  return limit;
}
}  // namespace detail

inline constexpr int kDefaultMaxPartitionSize = 10;

/// Largest n accepted by enumerate (default 10, |NC(10)| = 16796).
inline int max_partition_size() { return detail::partition_size_limit().load(); }
inline void set_max_partition_size(int n) { detail::partition_size_limit().store(n); }

/// Every partition of [n] in the family, each exactly once, sorted by
/// restricted growth string.
inline std::vector<Partition> enumerate(int n, PartitionFamily family) {
  if (n < 1 || n > max_partition_size())
    throw SizeLimitError("partition size " + std::to_string(n) + " outside [1, " +
                         std::to_string(max_partition_size()) + "]");
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  // Depth-first over restricted growth strings yields them in lexicographic order.
  std::function<void(int, int)> rec = [&](int pos, int max_label) {
    if (pos == n) {
      Partition p = Partition::from_labels(rgs);
      if (p.in_family(family)) out.push_back(std::move(p));
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      rgs[pos] = l;
      rec(pos + 1, std::max(max_label, l));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

/// Process-wide cache of enumerate(n, family). The returned reference stays
/// valid for the lifetime of the program.
inline const std::vector<Partition>& cached_partitions(int n, PartitionFamily family) {
  static std::mutex mu;
  static std::map<std::pair<int, PartitionFamily>, std::unique_ptr<const std::vector<Partition>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, family}];
  if (!slot) slot = std::make_unique<const std::vector<Partition>>(enumerate(n, family));
  return *slot;
}

/// refinement: pi <= sigma, every block of sigma is a union of blocks of pi.
/// minmax: pi << sigma, pi <= sigma and for every block V of sigma, min(V) and
/// max(V) lie in one block of pi.
inline bool compare(const Partition& pi, const Partition& sigma, PartitionOrder order) {
  if (pi.size() != sigma.size()) throw DimensionError("partitions of different ground sets");
  for (const auto& block : pi.blocks()) {
    int target = sigma.block_of(block.front());
    for (int x : block)
      if (sigma.block_of(x) != target) return false;
  }
  if (order == PartitionOrder::refinement) return true;
  for (const auto& v : sigma.blocks())
    if (pi.block_of(v.front()) != pi.block_of(v.back())) return false;
  return true;
}

struct NestingStats {
  std::uint64_t tree_factorial = 1;  // tau(pi)!
  std::uint64_t monotone_count = 1;  // m(pi) = |pi|! / tau(pi)!
  friend bool operator==(const NestingStats&, const NestingStats&) = default;
};

/// tau(pi)! = prod_V N(V), N(V) = number of blocks contained in [min V, max V].
inline NestingStats nesting_stats(const Partition& pi) {
  if (!pi.is_noncrossing()) throw DomainError("nesting statistics need a non-crossing partition");
  NestingStats s;
  for (const auto& v : pi.blocks()) {
    std::uint64_t inside = 0;
    for (const auto& w : pi.blocks())
      if (w.front() >= v.front() && w.back() <= v.back()) ++inside;
    s.tree_factorial *= inside;
  }
  std::uint64_t fact = 1;
  for (std::uint64_t i = 2; i <= pi.block_count(); ++i) fact *= i;
  s.monotone_count = fact / s.tree_factorial;
  return s;
}

/// 1 / tau(pi)! as an exact rational.
inline Rational inverse_tree_factorial(const Partition& pi) {
  Rational q(mpz_class(1), mpz_class(static_cast<unsigned long>(nesting_stats(pi).tree_factorial)));
  q.canonicalize();
  return q;
}

namespace detail {

/// Moebius function mu(sigma, 1_n) for every sigma in NC(n), by the defining
/// recursion mu(sigma, 1_n) = -sum_{sigma < tau <= 1_n} mu(tau, 1_n).
class MobiusTable {
 public:
  explicit MobiusTable(int n) : list_(cached_partitions(n, PartitionFamily::noncrossing)) {
    const std::size_t count = list_.size();
    for (std::size_t i = 0; i < count; ++i) index_.emplace(list_[i].key(), static_cast<int>(i));

    // Upper covers: merging two blocks while staying non-crossing.
    std::vector<std::vector<int>> covers(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto& p = list_[i];
      const int blocks = static_cast<int>(p.block_count());
      for (int a = 0; a < blocks; ++a) {
        for (int b = a + 1; b < blocks; ++b) {
          std::vector<int> labels = p.labels();
          for (int& l : labels)
            if (l == b) l = a;
          Partition merged = Partition::from_labels(labels);
          if (!merged.is_noncrossing()) continue;
          covers[i].push_back(index_.at(merged.key()));
        }
      }
    }

    std::vector<int> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return list_[x].block_count() < list_[y].block_count(); });

    mobius_.assign(count, 0);
    std::vector<int> stamp(count, -1);
    std::vector<int> stack;
    for (int s : order) {
      if (list_[s].block_count() == 1) {
        mobius_[s] = 1;
        continue;
      }
      std::int64_t sum = 0;
      stack.assign(covers[s].begin(), covers[s].end());
      for (int t : stack) stamp[t] = s;
      while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        sum += mobius_[t];
        for (int u : covers[t]) {
          if (stamp[u] == s) continue;
          stamp[u] = s;
          stack.push_back(u);
        }
      }
      mobius_[s] = -sum;
    }
  }

  std::int64_t at(const Partition& p) const { return mobius_[index_.at(p.key())]; }

 private:
  const std::vector<Partition>& list_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::int64_t> mobius_;
};

inline const MobiusTable& mobius_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const MobiusTable>> tables;
  std::lock_guard lock(mu);
  auto& slot = tables[n];
  if (!slot) slot = std::make_unique<const MobiusTable>(n);
  return *slot;
}

}  // namespace detail

/// Moebius function Moeb(sigma, 1_n) of the non-crossing partition lattice.
inline std::int64_t mobius_to_top(const Partition& sigma) {
  if (!sigma.is_noncrossing()) throw DomainError("Moebius function needs a non-crossing partition");
  return detail::mobius_table(sigma.size()).at(sigma);
}

/// Number of pi in NC(n) with pi >> sigma and |pi| = p, which is
/// binomial(|sigma| - 1, p - 1) for irreducible sigma.
inline std::uint64_t count_above_irreducible(const Partition& sigma, int p) {
  if (!sigma.is_noncrossing() || !sigma.is_irreducible())
    throw DomainError("count_above_irreducible needs a non-crossing irreducible partition");
  if (p < 1 || p > static_cast<int>(sigma.block_count()))
    throw DomainError("block count p outside [1, |sigma|]");
  return binomial(static_cast<unsigned>(sigma.block_count() - 1), static_cast<unsigned>(p - 1))
      .get_num()
      .get_ui();
}

/// Block v is nested inside block w: some i < j in w bracket all of v.
inline bool nested_inside(const std::vector<int>& v, const std::vector<int>& w) {
  if (v == w) return false;
  return std::any_of(w.begin(), w.end(), [&](int i) { return i < v.front(); }) &&
         std::any_of(w.begin(), w.end(), [&](int j) { return j > v.back(); });
}

/// Brute-force list of monotone labelings lambda : blocks -> {1..|pi|},
/// lambda[b] for block index b, with lambda(W) < lambda(V) whenever V is
/// nested inside W. Reference implementation for nesting_stats; the engines
/// never materialise labeled monotone partitions.
inline std::vector<std::vector<int>> monotone_labelings(const Partition& pi) {
  if (!pi.is_noncrossing()) throw DomainError("monotone labelings need a non-crossing partition");
  const auto& blocks = pi.blocks();
  std::vector<int> lambda(blocks.size());
  std::iota(lambda.begin(), lambda.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (std::size_t v = 0; v < blocks.size() && ok; ++v)
      for (std::size_t w = 0; w < blocks.size() && ok; ++w)
        if (nested_inside(blocks[v], blocks[w]) && !(lambda[w] < lambda[v])) ok = false;
    if (ok) out.push_back(lambda);
  } while (std::next_permutation(lambda.begin(), lambda.end()));
  return out;
}

}  // namespace ncc
