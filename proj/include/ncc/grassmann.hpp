#pragma once

#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "ncc/errors.hpp"
#include "ncc/rational.hpp"

namespace ncc {

/// Coefficient ring accepted by the combinatorial engines: a commutative ring
/// with an embedding of the rationals and a zero test.
template <class S>
concept Scalar = std::regular<S> && requires(const S& a, const S& b, const Rational& q) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  S(q);
  { is_zero(a) } -> std::convertible_to<bool>;
};

/// Grassmann (dual) number body + hbar * soul with hbar^2 = 0.
///
/// The soul behaves as a formal derivative: multiplication implements the
/// Leibniz rule, so products over partition blocks carry the derivative of
/// the product in their soul.
template <class R>
struct Grassmann {
  R body{};
  R soul{};

  Grassmann() = default;
  Grassmann(R b) : body(std::move(b)) {}  // NOLINT(google-explicit-constructor)
  Grassmann(R b, R s) : body(std::move(b)), soul(std::move(s)) {}

  template <class Q>
    requires(!std::same_as<std::remove_cvref_t<Q>, Grassmann> &&
             !std::same_as<std::remove_cvref_t<Q>, R> && std::constructible_from<R, const Q&>)
  Grassmann(const Q& q) : body(q) {}  // NOLINT(google-explicit-constructor)

  static Grassmann hbar() { return {R(0), R(1)}; }

  Grassmann& operator+=(const Grassmann& o) {
    body += o.body;
    soul += o.soul;
    return *this;
  }
  Grassmann& operator-=(const Grassmann& o) {
    body -= o.body;
    soul -= o.soul;
    return *this;
  }
  Grassmann& operator*=(const Grassmann& o) {
    R s = body * o.soul + soul * o.body;
    body = body * o.body;
    soul = std::move(s);
    return *this;
  }

  friend Grassmann operator+(Grassmann a, const Grassmann& b) { return a += b; }
  friend Grassmann operator-(Grassmann a, const Grassmann& b) { return a -= b; }
  friend Grassmann operator*(Grassmann a, const Grassmann& b) { return a *= b; }
  friend Grassmann operator-(const Grassmann& a) { return {R(-a.body), R(-a.soul)}; }

  friend bool operator==(const Grassmann&, const Grassmann&) = default;

  friend bool is_zero(const Grassmann& x) { return is_zero(x.body) && is_zero(x.soul); }
};

/// Exact Grassmann number over the rationals.
using GScalar = Grassmann<Rational>;

template <class R>
Grassmann<R> g_add(const Grassmann<R>& x, const Grassmann<R>& y) {
  return x + y;
}
template <class R>
Grassmann<R> g_neg(const Grassmann<R>& x) {
  return -x;
}
template <class R>
Grassmann<R> g_mul(const Grassmann<R>& x, const Grassmann<R>& y) {
  return x * y;
}
template <class R>
Grassmann<R> g_scale(const Grassmann<R>& x, const R& c) {
  return {R(c * x.body), R(c * x.soul)};
}

/// x^n for n >= 0: (a + hbar b)^n = a^n + hbar n a^(n-1) b.
template <class R>
Grassmann<R> g_pow(const Grassmann<R>& x, unsigned n) {
  Grassmann<R> result(R(1));
  for (unsigned i = 0; i < n; ++i) result *= x;
  return result;
}

/// (a + hbar b)^-1 = 1/a - hbar b/a^2. Requires a != 0.
inline GScalar g_inv(const GScalar& x) {
  if (is_zero(x.body)) throw NonInvertibleError("Grassmann number with zero body is not invertible");
  Rational inv = 1 / x.body;
  Rational soul = -x.soul * inv * inv;
  return {inv, soul};
}

inline GScalar g_pow(const GScalar& x, int n) {
  if (n >= 0) return g_pow<Rational>(x, static_cast<unsigned>(n));
  return g_pow<Rational>(g_inv(x), static_cast<unsigned>(-n));
}

/// "p/q" when the soul vanishes, otherwise "p/q + h*r/s" (r may be negative).
inline std::string to_string(const GScalar& x) {
  std::string out = to_string(x.body);
  if (!is_zero(x.soul)) out += " + h*" + to_string(x.soul);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const GScalar& x) { return os << to_string(x); }

/// Accepts "a", "a + h*b", "a - h*b" (spaces optional).
inline GScalar parse_gscalar(std::string_view text) {
  auto h = text.find('h');
  if (h == std::string_view::npos) return GScalar(parse_rational(text));

  std::string_view head = text.substr(0, h);
  std::string_view tail = text.substr(h + 1);
  auto tail_start = tail.find_first_not_of(" \t");
  if (tail_start == std::string_view::npos || tail[tail_start] != '*')
    throw ParseError("malformed Grassmann number '" + std::string(text) + "'");
  tail = tail.substr(tail_start + 1);

  auto op = head.find_last_not_of(" \t");
  if (op == std::string_view::npos || (head[op] != '+' && head[op] != '-'))
    throw ParseError("malformed Grassmann number '" + std::string(text) + "'");
  Rational body = parse_rational(head.substr(0, op));
  Rational soul = parse_rational(tail);
  if (head[op] == '-') soul = -soul;
  return {body, soul};
}

}  // namespace ncc
