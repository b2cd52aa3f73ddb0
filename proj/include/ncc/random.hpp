#pragma once

#include <cstdint>
#include <random>
#include <unordered_map>

#include "ncc/functional.hpp"
#include "ncc/law.hpp"

namespace ncc {

/// Deterministic across platforms: uses the raw mt19937_64 stream with a
/// modulo mapping instead of the implementation-defined distributions.
using Rng = std::mt19937_64;

/// p/q with p in [-9, 9], q in [1, 9].
inline Rational random_rational(Rng& rng) {
  long p = static_cast<long>(rng() % 19) - 9;
  long q = static_cast<long>(rng() % 9) + 1;
  return frac(p, q);
}

inline GScalar random_gscalar(Rng& rng, bool with_soul = true) {
  Rational body = random_rational(rng);
  return with_soul ? GScalar(body, random_rational(rng)) : GScalar(body);
}

/// Random table over {1..k}, words of length 1..order.
inline Law random_law(int k, int order, Rng& rng, bool with_soul = true) {
  Law law(k, order);
  for (const Word& w : law.words()) law.set(w, random_gscalar(rng, with_soul));
  return law;
}

inline WordTable<Rational> random_rational_table(int k, int order, Rng& rng) {
  WordTable<Rational> t(k, order);
  for (const Word& w : t.words()) t.set(w, random_rational(rng));
  return t;
}

/// Functional with independent random values on every monomial of total
/// length <= order, the unit included.
inline Functional<GScalar> random_generic_functional(int k, int order, Rng& rng) {
  std::unordered_map<Monomial, GScalar, MonomialHash> values;
  for (const auto& m : monomials_up_to(k, order)) values.emplace(m, random_gscalar(rng));
  return Functional<GScalar>::generic(k, order, std::move(values));
}

}  // namespace ncc
