#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "ncc/errors.hpp"

namespace ncc {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Parses "p", "-p", "p/q" (q > 0 after sign normalisation). Whitespace around
/// the token is ignored, nothing else is accepted.
inline Rational parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r");
  auto last = text.find_last_not_of(" \t\r");
  if (first == std::string_view::npos) throw ParseError("empty rational");
  std::string_view s = text.substr(first, last - first + 1);

  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) throw ParseError("malformed rational '" + std::string(s) + "'");
  if (i < s.size()) {
    if (s[i] != '/') throw ParseError("malformed rational '" + std::string(s) + "'");
    ++i;
    std::size_t den_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++den_digits;
    if (den_digits == 0 || i != s.size()) throw ParseError("malformed rational '" + std::string(s) + "'");
  }

  std::string buf(s[0] == '+' ? s.substr(1) : s);
  Rational q;
  if (q.set_str(buf, 10) != 0) throw ParseError("malformed rational '" + std::string(s) + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

/// Canonical "p/q" form; the denominator is omitted when it is 1.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

/// p/q in lowest terms, q != 0.
inline Rational frac(long p, long q) {
  if (q == 0) throw DomainError("zero denominator");
  Rational r{mpz_class(p), mpz_class(q)};
  r.canonicalize();
  return r;
}

inline Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace ncc
