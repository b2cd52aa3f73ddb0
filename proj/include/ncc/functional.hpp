#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncc/errors.hpp"
#include "ncc/law.hpp"
#include "ncc/tensor.hpp"

namespace ncc {

enum class FunctionalMode { character, infinitesimal, derivation, generic };

inline std::string_view to_string(FunctionalMode m) {
  switch (m) {
    case FunctionalMode::character: return "character";
    case FunctionalMode::infinitesimal: return "infinitesimal";
    case FunctionalMode::derivation: return "derivation";
    case FunctionalMode::generic: return "generic";
  }
  return "?";
}

enum class ProductKind { star, prec, succ };

namespace detail {

template <Scalar S>
class FunctionalNode {
 public:
  FunctionalNode(int k, int order, FunctionalMode mode) : k_(k), order_(order), mode_(mode) {}
  virtual ~FunctionalNode() = default;

  int vars() const { return k_; }
  int order() const { return order_; }
  FunctionalMode mode() const { return mode_; }

  virtual S eval(const Monomial& m) const {
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(m); it != cache_.end()) return it->second;
    }
    S v = compute(m);
    std::lock_guard lock(mu_);
    cache_.try_emplace(m, v);
    return v;
  }

  /// Word values when the node is backed by a table, else null.
  virtual const WordTable<S>* table() const { return nullptr; }

 protected:
  virtual S compute(const Monomial&) const { return S(Rational(0)); }

 private:
  int k_, order_;
  FunctionalMode mode_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Monomial, S, MonomialHash> cache_;
};

template <Scalar S>
using NodePtr = std::shared_ptr<const FunctionalNode<S>>;

/// Character, infinitesimal character or derivation given by word values.
template <Scalar S>
class TableNode final : public FunctionalNode<S> {
 public:
  TableNode(FunctionalMode mode, WordTable<S> values, NodePtr<S> partner = nullptr)
      : FunctionalNode<S>(values.vars(), values.order(), mode), values_(std::move(values)), partner_(std::move(partner)) {}

  const WordTable<S>* table() const override { return &values_; }

  S eval(const Monomial& m) const override {
    const auto& bars = m.bars();
    switch (this->mode()) {
      case FunctionalMode::character: {
        S out(Rational(1));
        for (const auto& w : bars) out = out * values_.at(w);
        return out;
      }
      case FunctionalMode::infinitesimal:
        return bars.size() == 1 ? values_.at(bars.front()) : S(Rational(0));
      case FunctionalMode::derivation: {
        // Phi'(w_1|...|w_k) = sum_i Phi'(w_i) prod_{j != i} Phi(w_j)
        S out(Rational(0));
        for (std::size_t i = 0; i < bars.size(); ++i) {
          S term = values_.at(bars[i]);
          for (std::size_t j = 0; j < bars.size(); ++j)
            if (j != i) term = term * partner_->eval(Monomial(bars[j]));
          out = out + term;
        }
        return out;
      }
      case FunctionalMode::generic: break;
    }
    return S(Rational(0));
  }

 private:
  WordTable<S> values_;
  NodePtr<S> partner_;
};

/// Explicit values on finitely many monomials, zero elsewhere.
template <Scalar S>
class GenericNode final : public FunctionalNode<S> {
 public:
  GenericNode(int k, int order, std::unordered_map<Monomial, S, MonomialHash> values)
      : FunctionalNode<S>(k, order, FunctionalMode::generic), values_(std::move(values)) {}

  S eval(const Monomial& m) const override {
    auto it = values_.find(m);
    return it == values_.end() ? S(Rational(0)) : it->second;
  }

 private:
  std::unordered_map<Monomial, S, MonomialHash> values_;
};

/// f * g, f < g or f > g paired with the (half) coproduct.
template <Scalar S>
class ProductNode final : public FunctionalNode<S> {
 public:
  ProductNode(ProductKind kind, NodePtr<S> f, NodePtr<S> g)
      : FunctionalNode<S>(f->vars(), f->order(), FunctionalMode::generic),
        kind_(kind),
        f_(std::move(f)),
        g_(std::move(g)) {}

 protected:
  S compute(const Monomial& m) const override {
    SplitKind split = kind_ == ProductKind::star ? SplitKind::full
                      : kind_ == ProductKind::prec ? SplitKind::prec
                                                   : SplitKind::succ;
    S out(Rational(0));
    for_each_split(m, split, [&](const Monomial& left, const Monomial& right) {
      S a = f_->eval(left);
      if (is_zero(a)) return;
      out = out + a * g_->eval(right);
    });
    return out;
  }

 private:
  ProductKind kind_;
  NodePtr<S> f_, g_;
};

template <Scalar S>
class LinearNode final : public FunctionalNode<S> {
 public:
  LinearNode(int k, int order, std::vector<std::pair<S, NodePtr<S>>> terms)
      : FunctionalNode<S>(k, order, FunctionalMode::generic), terms_(std::move(terms)) {}

 protected:
  S compute(const Monomial& m) const override {
    S out(Rational(0));
    for (const auto& [c, node] : terms_) out = out + c * node->eval(m);
    return out;
  }

 private:
  std::vector<std::pair<S, NodePtr<S>>> terms_;
};

}  // namespace detail

/// Linear functional on the double tensor algebra, truncated at total word
/// length N. Characters, infinitesimal characters and derivations are stored
/// by their word values; products and linear combinations are evaluated
/// lazily with per-node memoisation.
template <Scalar S>
class Functional {
 public:
  static Functional character(WordTable<S> values) {
    return Functional(std::make_shared<detail::TableNode<S>>(FunctionalMode::character, std::move(values)));
  }
  static Functional infinitesimal(WordTable<S> values) {
    return Functional(std::make_shared<detail::TableNode<S>>(FunctionalMode::infinitesimal, std::move(values)));
  }
  /// Phi' with Phi'(w_1|w_2) = Phi(w_1)Phi'(w_2) + Phi'(w_1)Phi(w_2).
  static Functional derivation(WordTable<S> values, const Functional& partner) {
    if (partner.mode() != FunctionalMode::character) throw DomainError("derivation partner must be a character");
    check_shape(values.vars(), values.order(), partner);
    return Functional(
        std::make_shared<detail::TableNode<S>>(FunctionalMode::derivation, std::move(values), partner.node_));
  }
  /// Values on arbitrary monomials (the unit included); unlisted monomials are 0.
  static Functional generic(int k, int order, std::unordered_map<Monomial, S, MonomialHash> values) {
    return Functional(std::make_shared<detail::GenericNode<S>>(k, order, std::move(values)));
  }
  /// The counit epsilon: 1 on the unit, 0 elsewhere.
  static Functional counit(int k, int order) { return character(WordTable<S>(k, order)); }
  static Functional zero(int k, int order) { return infinitesimal(WordTable<S>(k, order)); }

  FunctionalMode mode() const { return node_->mode(); }
  int vars() const { return node_->vars(); }
  int order() const { return node_->order(); }

  S operator()(const Monomial& m) const {
    if (static_cast<int>(m.total_length()) > order())
      throw DimensionError("monomial " + m.to_string() + " exceeds truncation order " + std::to_string(order()));
    return node_->eval(m);
  }
  S operator()(const Word& w) const { return (*this)(Monomial(w)); }
  S operator()(const TensorElement<S>& x) const {
    S out(Rational(0));
    for (const auto& [m, c] : x.terms()) out = out + c * (*this)(m);
    return out;
  }
  S unit_value() const { return node_->eval(Monomial{}); }

  WordTable<S> word_values() const {
    if (const auto* t = node_->table()) return *t;
    WordTable<S> out(vars(), order());
    for (const Word& w : out.words()) out.set(w, node_->eval(Monomial(w)));
    return out;
  }

  /// Character with the same word values. The unit value must be 1.
  Functional as_character() const {
    if (mode() == FunctionalMode::character) return *this;
    if (unit_value() != S(Rational(1))) throw DomainError("functional with unit value != 1 is not a character");
    return character(word_values());
  }
  /// Infinitesimal character with the same word values. The unit value must be 0.
  Functional as_infinitesimal() const {
    if (mode() == FunctionalMode::infinitesimal) return *this;
    if (!is_zero(unit_value())) throw DomainError("functional with non-zero unit value is not infinitesimal");
    return infinitesimal(word_values());
  }

  static Functional linear_combination(const std::vector<std::pair<S, Functional>>& terms) {
    if (terms.empty()) throw DomainError("empty linear combination");
    const Functional& first = terms.front().second;
    bool all_infinitesimal = true;
    for (const auto& [c, f] : terms) {
      check_shape(first.vars(), first.order(), f);
      all_infinitesimal = all_infinitesimal && f.mode() == FunctionalMode::infinitesimal;
    }
    if (all_infinitesimal) {
      // g is a vector space: combine word values eagerly.
      WordTable<S> out(first.vars(), first.order());
      for (const auto& [c, f] : terms) {
        const auto* t = f.node_->table();
        t->for_each([&](const Word& w, const S& v) { out.at(w) = out.at(w) + c * v; });
      }
      return infinitesimal(std::move(out));
    }
    std::vector<std::pair<S, detail::NodePtr<S>>> nodes;
    for (const auto& [c, f] : terms) nodes.emplace_back(c, f.node_);
    return Functional(std::make_shared<detail::LinearNode<S>>(first.vars(), first.order(), std::move(nodes)));
  }

  friend Functional operator+(const Functional& a, const Functional& b) {
    return linear_combination({{S(Rational(1)), a}, {S(Rational(1)), b}});
  }
  friend Functional operator-(const Functional& a, const Functional& b) {
    return linear_combination({{S(Rational(1)), a}, {S(Rational(-1)), b}});
  }
  friend Functional operator-(const Functional& a) { return linear_combination({{S(Rational(-1)), a}}); }
  friend Functional operator*(const S& c, const Functional& a) { return linear_combination({{c, a}}); }

  friend Functional convolve(const Functional& f, const Functional& g, ProductKind kind) {
    check_shape(f.vars(), f.order(), g);
    return Functional(std::make_shared<detail::ProductNode<S>>(kind, f.node_, g.node_));
  }

 private:
  explicit Functional(detail::NodePtr<S> node) : node_(std::move(node)) {}

  static void check_shape(int k, int order, const Functional& f) {
    if (f.vars() != k || f.order() != order)
      throw DimensionError("functionals differ in variable count or truncation order");
  }

  detail::NodePtr<S> node_;
};

template <Scalar S>
Functional<S> star(const Functional<S>& f, const Functional<S>& g) {
  return convolve(f, g, ProductKind::star);
}
template <Scalar S>
Functional<S> prec(const Functional<S>& f, const Functional<S>& g) {
  return convolve(f, g, ProductKind::prec);
}
template <Scalar S>
Functional<S> succ(const Functional<S>& f, const Functional<S>& g) {
  return convolve(f, g, ProductKind::succ);
}

template <Scalar S>
Functional<S> linear_combination(const std::vector<std::pair<S, Functional<S>>>& terms) {
  return Functional<S>::linear_combination(terms);
}

/// First monomial of total length <= max_length (the unit included) on which
/// f and g differ, or nullopt.
template <Scalar S>
std::optional<Monomial> first_disagreement(const Functional<S>& f, const Functional<S>& g, int max_length) {
  for (const auto& m : monomials_up_to(f.vars(), max_length))
    if (f(m) != g(m)) return m;
  return std::nullopt;
}

/// First word of length 1..max_length on which f and g differ, or nullopt.
template <Scalar S>
std::optional<Word> first_word_disagreement(const Functional<S>& f, const Functional<S>& g, int max_length) {
  for (const auto& w : words_up_to(f.vars(), max_length))
    if (f(w) != g(w)) return w;
  return std::nullopt;
}

}  // namespace ncc
