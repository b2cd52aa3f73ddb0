#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncc/rational.hpp"

namespace ncc {

/// Commutative polynomial with rational coefficients in indeterminates
/// x_0, x_1, ... . Used as a symbolic coefficient ring: feeding the engines
/// tables whose entries are indeterminates yields closed-form expressions.
class Polynomial {
 public:
  /// Exponent vector without trailing zeros.
  using Exponents = std::vector<unsigned>;

  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!is_zero(c)) terms_.emplace(Exponents{}, c);
  }
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(unsigned index) { return monomial({{index, 1}}); }

  /// Product of the given (variable, power) pairs with coefficient c.
  static Polynomial monomial(std::initializer_list<std::pair<unsigned, unsigned>> powers,
                             const Rational& c = 1) {
    Exponents e;
    for (auto [var, pow] : powers) {
      if (e.size() <= var) e.resize(var + 1, 0);
      e[var] += pow;
    }
    trim(e);
    Polynomial p;
    if (!is_zero(c)) p.terms_.emplace(std::move(e), c);
    return p;
  }

  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Rational coefficient(const Exponents& e) const {
    Exponents key = e;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend bool is_zero(const Polynomial& p) { return p.terms_.empty(); }

  /// Human-readable form, e.g. "4*r1'*r1^3 + 1/2*r2". Variable names default
  /// to x<i>.
  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational mag = abs(c);
      out += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
      first = false;
      std::string factors;
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += v < names.size() ? names[v] : "x" + std::to_string(v);
        if (e[v] > 1) factors += "^" + std::to_string(e[v]);
      }
      if (factors.empty()) {
        out += ncc::to_string(mag);
      } else {
        if (mag != 1) out += ncc::to_string(mag) + "*";
        out += factors;
      }
    }
    return out;
  }

 private:
  static void trim(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  std::map<Exponents, Rational> terms_;
};

}  // namespace ncc
