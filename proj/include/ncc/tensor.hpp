#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncc/errors.hpp"
#include "ncc/grassmann.hpp"
#include "ncc/word.hpp"

namespace ncc {

/// Bar monomial w_1 | ... | w_m of non-empty words; m = 0 is the unit 1.
class Monomial {
 public:
  Monomial() = default;
  /// Empty words are the unit of the bar product and are dropped.
  explicit Monomial(std::vector<Word> bars) {
    for (auto& w : bars)
      if (!w.empty()) bars_.push_back(std::move(w));
  }
  Monomial(const Word& w) {  // NOLINT(google-explicit-constructor)
    if (!w.empty()) bars_.push_back(w);
  }

  const std::vector<Word>& bars() const { return bars_; }
  std::size_t bar_count() const { return bars_.size(); }
  bool is_unit() const { return bars_.empty(); }
  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& w : bars_) n += w.size();
    return n;
  }

  friend Monomial operator|(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    out.bars_.insert(out.bars_.end(), b.bars_.begin(), b.bars_.end());
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.total_length() <=> b.total_length(); c != 0) return c;
    if (auto c = a.bars_.size() <=> b.bars_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.bars_.size(); ++i)
      if (auto c = a.bars_[i] <=> b.bars_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// "[1 2|1]", unit "[]".
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < bars_.size(); ++i) {
      if (i) out += '|';
      out += bars_[i].to_string();
    }
    return out + "]";
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& w : bars_) h = (h ^ w.hash()) * 0x100000001b3ull + 0x7f;
    return h;
  }

 private:
  std::vector<Word> bars_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class SplitKind { full, prec, succ };

/// Visits every term left (x) right of the coproduct of m, extended
/// multiplicatively over bars: for m = w_1|...|w_k the terms are indexed by
/// subsets S_i of the positions of each w_i, left = a_{S_1}|...|a_{S_k} and
/// right = the bars a_J for the maximal runs J of positions outside each S_i.
/// prec keeps only S_1 containing the first letter of w_1, succ only those
/// that do not. The unit has the single term 1 (x) 1 under full and none
/// under prec or succ.
template <class F>
void for_each_split(const Monomial& m, SplitKind kind, F&& f) {
  if (m.is_unit()) {
    if (kind == SplitKind::full) f(Monomial{}, Monomial{});
    return;
  }
  const auto& bars = m.bars();
  const std::size_t total = m.total_length();
  if (total > 30) throw SizeLimitError("monomial too long for coproduct expansion");

  std::vector<std::size_t> offset(bars.size());
  for (std::size_t i = 1; i < bars.size(); ++i) offset[i] = offset[i - 1] + bars[i - 1].size();

  const std::uint32_t limit = std::uint32_t{1} << total;
  std::vector<Word> left, right;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (kind == SplitKind::prec && !(mask & 1u)) continue;
    if (kind == SplitKind::succ && (mask & 1u)) continue;
    left.clear();
    right.clear();
    for (std::size_t i = 0; i < bars.size(); ++i) {
      const Word& w = bars[i];
      const std::uint32_t sub = (mask >> offset[i]) & ((std::uint32_t{1} << w.size()) - 1);
      if (sub) left.push_back(w.restrict_mask(sub));
      std::size_t j = 0;
      while (j < w.size()) {
        if (sub >> j & 1u) {
          ++j;
          continue;
        }
        std::size_t start = j;
        while (j < w.size() && !(sub >> j & 1u)) ++j;
        right.push_back(w.slice(start, j));
      }
    }
    f(Monomial(left), Monomial(right));
  }
}

/// Every bar monomial of total length <= max_length over {1..k}, the unit
/// first, then ordered by total length.
inline std::vector<Monomial> monomials_up_to(int k, int max_length) {
  std::vector<Monomial> out{Monomial{}};
  for (int n = 1; n <= max_length; ++n) {
    for (const Word& w : words_of_length(k, n)) {
      // bit i of cuts: a bar ends after letter i + 1
      for (std::uint32_t cuts = 0; cuts < (std::uint32_t{1} << (n - 1)); ++cuts) {
        std::vector<Word> bars;
        std::size_t start = 0;
        for (int i = 0; i < n - 1; ++i) {
          if (cuts >> i & 1u) {
            bars.push_back(w.slice(start, i + 1));
            start = i + 1;
          }
        }
        bars.push_back(w.slice(start, n));
        out.emplace_back(std::move(bars));
      }
    }
  }
  return out;
}

/// Finite linear combination of bar monomials in canonical sorted form.
template <Scalar S>
class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(const Monomial& m, S c = S(Rational(1))) { add(m, std::move(c)); }  // NOLINT

  void add(const Monomial& m, const S& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  const std::map<Monomial, S>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    for (const auto& [m, c] : b.terms_) a.add(m, c);
    return a;
  }
  friend TensorElement operator*(const S& c, const TensorElement& a) {
    TensorElement out;
    for (const auto& [m, x] : a.terms_) out.add(m, c * x);
    return out;
  }
  /// Bilinear extension of the bar product.
  friend TensorElement operator|(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add(ma | mb, ca * cb);
    return out;
  }
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + ncc::to_string(c) + ")" + m.to_string();
    }
    return out;
  }

 private:
  std::map<Monomial, S> terms_;
};

/// Coproduct of a non-empty word as (a_S, bars of J) pairs, restricted to the
/// terms selected by kind. S = [n] gives (w, 1), S = {} gives (1, w).
template <Scalar S = GScalar>
std::vector<std::pair<Word, TensorElement<S>>> coproduct(const Word& w, SplitKind kind) {
  if (w.empty()) throw DomainError("coproduct of the empty word");
  std::vector<std::pair<Word, TensorElement<S>>> out;
  for_each_split(Monomial(w), kind, [&](const Monomial& left, const Monomial& right) {
    Word a = left.is_unit() ? Word{} : left.bars().front();
    out.emplace_back(std::move(a), TensorElement<S>(right));
  });
  return out;
}

}  // namespace ncc

template <>
struct std::hash<ncc::Monomial> {
  std::size_t operator()(const ncc::Monomial& m) const { return m.hash(); }
};
