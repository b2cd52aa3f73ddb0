#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncc/errors.hpp"
#include "ncc/grassmann.hpp"
#include "ncc/partition.hpp"
#include "ncc/word.hpp"

namespace ncc {

/// Dense table Word -> S over all words of length 1..N in k variables.
/// Words are stored in shortlex order; the empty word is not part of the table.
template <Scalar S>
class WordTable {
 public:
  static constexpr std::uint64_t kMaxEntries = 1u << 22;

  WordTable() = default;
  WordTable(int k, int order) : k_(k), order_(order) {
    if (k < 1) throw DomainError("number of variables must be positive");
    if (order < 0) throw DomainError("truncation order must be non-negative");
    offsets_.assign(order + 2, 0);
    std::uint64_t layer = 1;
    for (int n = 1; n <= order + 1; ++n) {
      offsets_[n] = n == 1 ? 0 : offsets_[n - 1] + layer;
      if (n <= order) {
        layer = n == 1 ? static_cast<std::uint64_t>(k) : layer * k;
        if (offsets_[n] + layer > kMaxEntries)
          throw SizeLimitError("table with " + std::to_string(k) + " variables and order " +
                               std::to_string(order) + " is too large");
      }
    }
    values_.assign(offsets_[order + 1], S(Rational(0)));
  }

  int vars() const { return k_; }
  int order() const { return order_; }
  std::size_t entry_count() const { return values_.size(); }

  bool contains(const Word& w) const {
    if (w.empty() || static_cast<int>(w.size()) > order_) return false;
    for (int l : w)
      if (l < 1 || l > k_) return false;
    return true;
  }

  const S& at(const Word& w) const { return values_[index(w)]; }
  S& at(const Word& w) { return values_[index(w)]; }
  const S& operator[](const Word& w) const { return at(w); }
  void set(const Word& w, S value) { values_[index(w)] = std::move(value); }

  /// Words of the table in storage (shortlex) order.
  std::vector<Word> words() const { return words_up_to(k_, order_); }

  template <class F>
  void for_each(F&& f) const {
    std::size_t i = 0;
    for (int n = 1; n <= order_; ++n)
      for (const Word& w : words_of_length(k_, n)) f(w, values_[i++]);
  }

  template <class F>
  auto map(F&& f) const {
    using T = std::remove_cvref_t<decltype(f(std::declval<const S&>()))>;
    WordTable<T> out(k_, order_);
    for_each([&](const Word& w, const S& v) { out.set(w, f(v)); });
    return out;
  }

  friend bool operator==(const WordTable&, const WordTable&) = default;

  /// Storage slot of w, its rank in shortlex order.
  std::size_t index(const Word& w) const {
    if (w.empty()) throw DomainError("tables are not indexed by the empty word");
    if (static_cast<int>(w.size()) > order_)
      throw DimensionError("word of length " + std::to_string(w.size()) + " exceeds order " +
                           std::to_string(order_));
    std::uint64_t code = 0;
    for (int l : w) {
      if (l < 1 || l > k_) throw DimensionError("letter " + std::to_string(l) + " outside 1.." + std::to_string(k_));
      code = code * k_ + (l - 1);
    }
    return offsets_[w.size()] + code;
  }

 private:
  int k_ = 1;
  int order_ = 0;
  std::vector<std::uint64_t> offsets_{0, 0};
  std::vector<S> values_;
};

/// Truncated infinitesimal law: phi~(w) = phi(w) + hbar phi'(w) for every word
/// of length 1..N; phi~(empty) = 1 implicitly.
using Law = WordTable<GScalar>;

enum class CumulantFamily { free, boolean, monotone };

inline std::string_view to_string(CumulantFamily f) {
  switch (f) {
    case CumulantFamily::free: return "free";
    case CumulantFamily::boolean: return "boolean";
    case CumulantFamily::monotone: return "monotone";
  }
  return "?";
}

inline CumulantFamily parse_cumulant_family(std::string_view s) {
  if (s == "free") return CumulantFamily::free;
  if (s == "boolean") return CumulantFamily::boolean;
  if (s == "monotone") return CumulantFamily::monotone;
  throw DomainError("unknown cumulant family '" + std::string(s) + "'");
}

/// Word table read as cumulants of one family.
template <Scalar S>
struct BasicCumulantTable {
  CumulantFamily family = CumulantFamily::free;
  WordTable<S> values;

  friend bool operator==(const BasicCumulantTable&, const BasicCumulantTable&) = default;
};

using CumulantTable = BasicCumulantTable<GScalar>;

/// f_pi(w) = prod_{V in pi} f(w|_V). Over GScalar the soul is the Leibniz sum
/// of the partition product.
template <Scalar S>
S extend_over_partition(const WordTable<S>& values, const Partition& pi, const Word& w) {
  if (static_cast<int>(w.size()) != pi.size())
    throw DimensionError("word length " + std::to_string(w.size()) + " differs from partition size " +
                         std::to_string(pi.size()));
  S out(Rational(1));
  for (const auto& block : pi.blocks()) out = out * values.at(w.restrict(block));
  return out;
}

template <Scalar S>
S extend_over_partition(const BasicCumulantTable<S>& table, const Partition& pi, const Word& w) {
  return extend_over_partition(table.values, pi, w);
}

/// d f_pi(w) = sum_{V in pi} f'(w|_V) prod_{W != V} f(w|_W), the formal
/// derivative of the partition product given body values f and souls f'.
inline Rational derivative_over_partition(const WordTable<Rational>& f, const WordTable<Rational>& df,
                                          const Partition& pi, const Word& w) {
  if (static_cast<int>(w.size()) != pi.size()) throw DimensionError("word length differs from partition size");
  Rational out = 0;
  const auto& blocks = pi.blocks();
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    Rational term = df.at(w.restrict(blocks[v]));
    for (std::size_t u = 0; u < blocks.size() && sgn(term) != 0; ++u)
      if (u != v) term *= f.at(w.restrict(blocks[u]));
    out += term;
  }
  return out;
}

/// Body and soul parts of a Grassmann table.
inline WordTable<Rational> body_of(const Law& law) {
  return law.map([](const GScalar& x) { return x.body; });
}
inline WordTable<Rational> soul_of(const Law& law) {
  return law.map([](const GScalar& x) { return x.soul; });
}

/// Law with the given body and soul tables.
inline Law merge(const WordTable<Rational>& body, const WordTable<Rational>& soul) {
  if (body.vars() != soul.vars() || body.order() != soul.order())
    throw DimensionError("body and soul tables differ in shape");
  Law out(body.vars(), body.order());
  body.for_each([&](const Word& w, const Rational& b) { out.set(w, GScalar(b, soul.at(w))); });
  return out;
}

/// Restriction of a table to words of length <= order.
template <Scalar S>
WordTable<S> truncate(const WordTable<S>& t, int order) {
  if (order > t.order()) throw DimensionError("cannot truncate to a larger order");
  WordTable<S> out(t.vars(), order);
  out.for_each([&](const Word& w, const S&) { out.set(w, t.at(w)); });
  return out;
}

}  // namespace ncc
