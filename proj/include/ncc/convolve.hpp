#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ncc/cumulants.hpp"
#include "ncc/errors.hpp"
#include "ncc/law.hpp"
#include "ncc/shuffle.hpp"

namespace ncc {

enum class ConvolutionKind { free, boolean };

inline std::string_view to_string(ConvolutionKind k) { return k == ConvolutionKind::free ? "free" : "boolean"; }

inline ConvolutionKind parse_convolution_kind(std::string_view s) {
  if (s == "free") return ConvolutionKind::free;
  if (s == "boolean") return ConvolutionKind::boolean;
  throw DomainError("unknown convolution kind '" + std::string(s) + "'");
}

inline CumulantFamily family_of(ConvolutionKind k) {
  return k == ConvolutionKind::free ? CumulantFamily::free : CumulantFamily::boolean;
}

namespace detail {

inline void require_same_shape(const Law& a, const Law& b) {
  if (a.vars() != b.vars() || a.order() != b.order())
    throw DimensionError("laws differ in variable count or truncation order");
}

}  // namespace detail

/// mu [+] nu (free) or mu [+]_B nu (Boolean): the cumulant tables add.
inline Law convolve_laws(const Law& mu, const Law& nu, ConvolutionKind kind) {
  detail::require_same_shape(mu, nu);
  auto a = moments_to_cumulants(mu, family_of(kind));
  auto b = moments_to_cumulants(nu, family_of(kind));
  a.values.for_each([&](const Word& w, const GScalar&) { a.values.at(w) += b.values.at(w); });
  return cumulants_to_moments(a);
}

/// mu^{[+]s}: the cumulant table of the kind scaled by s.
inline Law law_power(const Law& mu, const Rational& s, ConvolutionKind kind, bool allow_negative = false) {
  if (sgn(s) < 0 && !allow_negative) throw DomainError("negative convolution power " + to_string(s));
  auto c = moments_to_cumulants(mu, family_of(kind));
  c.values.for_each([&](const Word& w, const GScalar& v) { c.values.at(w) = g_scale(v, s); });
  return cumulants_to_moments(c);
}

/// B_t(mu) = (mu^{[+](1+t)})^{[+]_B 1/(1+t)}.
inline Law bp_map(const Law& mu, const Rational& t, bool allow_negative = false) {
  if (sgn(t) < 0 && !allow_negative) throw DomainError("negative semigroup parameter " + to_string(t));
  Rational s = 1 + t;
  if (is_zero(s)) throw DomainError("semigroup parameter t = -1 is singular");
  return law_power(law_power(mu, s, ConvolutionKind::free, true), Rational(1 / s), ConvolutionKind::boolean, true);
}

/// B_t through the shuffle algebra: E_prec(theta_{E_prec(t kappa)}(kappa)) with
/// kappa = L_prec of the law's character.
inline Law bp_map_shuffle(const Law& mu, const Rational& t, bool allow_negative = false) {
  if (sgn(t) < 0 && !allow_negative) throw DomainError("negative semigroup parameter " + to_string(t));
  auto kappa = hs_log(law_character(mu), ProductKind::prec);
  auto psi = hs_exp(GScalar(t) * kappa, ProductKind::prec);
  return hs_exp(adjoint(psi, kappa), ProductKind::prec).word_values();
}

/// B^{-1}(Psi) = E_succ(L_prec(Psi)): the law whose Boolean cumulants are the
/// free cumulants of the input.
inline Law bp_inverse(const Law& psi) {
  return hs_exp(hs_log(law_character(psi), ProductKind::prec), ProductKind::succ).word_values();
}

/// Joint law of two univariate laws, Boolean or free independent: pure
/// cumulants from the inputs, every mixed cumulant zero.
inline Law join_independent(const Law& mu, const Law& nu, ConvolutionKind kind) {
  if (mu.vars() != 1 || nu.vars() != 1) throw DimensionError("join needs two univariate laws");
  if (mu.order() != nu.order()) throw DimensionError("laws differ in truncation order");
  auto a = moments_to_cumulants(mu, family_of(kind));
  auto b = moments_to_cumulants(nu, family_of(kind));
  CumulantTable joint{family_of(kind), Law(2, mu.order())};
  joint.values.for_each([&](const Word& w, const GScalar&) {
    bool all1 = true, all2 = true;
    for (int l : w) {
      all1 = all1 && l == 1;
      all2 = all2 && l == 2;
    }
    if (all1) joint.values.at(w) = a.values.at(power_word(static_cast<int>(w.size())));
    if (all2) joint.values.at(w) = b.values.at(power_word(static_cast<int>(w.size())));
  });
  return cumulants_to_moments(joint);
}

struct SeriesReport {
  int max_order = 0;
  std::size_t coefficients_checked = 0;
  bool product_identity = true;    // M' = (1 + M) B' (1 + M)
  bool corollary_identity = true;  // M' = M' B + (1 + M) B'
  std::string first_mismatch;

  bool ok() const { return product_identity && corollary_identity; }
};

/// Compares the coefficients of both generating-series identities relating
/// infinitesimal moments M' to Boolean cumulants B, B' on every word of length
/// 1..max_order. M, M', B, B' have zero constant term.
inline SeriesReport eta_series_check(const Law& mu, int max_order) {
  if (max_order < 1 || max_order > mu.order())
    throw DimensionError("series order " + std::to_string(max_order) + " outside 1.." + std::to_string(mu.order()));
  const auto b = moments_to_cumulants(mu, CumulantFamily::boolean).values;
  auto m_hat = [&](const Word& w) { return w.empty() ? Rational(1) : mu.at(w).body; };

  SeriesReport report;
  report.max_order = max_order;
  for (int n = 1; n <= max_order; ++n) {
    for (const Word& w : words_of_length(mu.vars(), n)) {
      const Rational lhs = mu.at(w).soul;
      Rational product = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
          product += m_hat(w.slice(0, i)) * b.at(w.slice(i, j)).soul * m_hat(w.slice(j, n));
      Rational corollary = 0;
      for (int i = 1; i < n; ++i) corollary += mu.at(w.slice(0, i)).soul * b.at(w.slice(i, n)).body;
      for (int i = 0; i < n; ++i) corollary += m_hat(w.slice(0, i)) * b.at(w.slice(i, n)).soul;

      report.coefficients_checked += 2;
      auto note = [&](const char* which, const Rational& rhs) {
        if (report.first_mismatch.empty())
          report.first_mismatch = std::string(which) + " at word '" + w.to_string() + "': lhs " + to_string(lhs) +
                                  ", rhs " + to_string(rhs);
      };
      if (lhs != product) {
        report.product_identity = false;
        note("M' = (1+M)B'(1+M)", product);
      }
      if (lhs != corollary) {
        report.corollary_identity = false;
        note("M' = M'B + (1+M)B'", corollary);
      }
    }
  }
  return report;
}

}  // namespace ncc
