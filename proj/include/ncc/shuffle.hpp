#pragma once

#include <vector>

#include "ncc/errors.hpp"
#include "ncc/functional.hpp"
#include "ncc/law.hpp"
#include "ncc/rational.hpp"

namespace ncc {

namespace detail {

template <Scalar S>
void require_character(const Functional<S>& f, const char* op) {
  if (f.mode() != FunctionalMode::character) throw DomainError(std::string(op) + " needs a character");
}

template <Scalar S>
void require_infinitesimal(const Functional<S>& f, const char* op) {
  if (f.mode() != FunctionalMode::infinitesimal) throw DomainError(std::string(op) + " needs an infinitesimal character");
}

/// Value of the character with word values t on a bar monomial.
template <Scalar S>
S character_value(const WordTable<S>& t, const Monomial& m) {
  S out(Rational(1));
  for (const auto& w : m.bars()) out = out * t.at(w);
  return out;
}

/// Value of the infinitesimal character with word values t on a bar monomial.
template <Scalar S>
S infinitesimal_value(const WordTable<S>& t, const Monomial& m) {
  return m.bar_count() == 1 ? t.at(m.bars().front()) : S(Rational(0));
}

}  // namespace detail

/// B_0, ..., B_n with B_1 = -1/2, from sum_{j<=m} binom(m+1, j) B_j = 0.
inline std::vector<Rational> bernoulli_numbers(int n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int j = 0; j < m; ++j) s += binomial(m + 1, j) * b[j];
    b[m] = -s / (m + 1);
  }
  return b;
}

/// Phi^{-1} with Phi * Phi^{-1} = epsilon, solved word length by word length:
/// Phi^{-1}(w) = -sum_{S != {}} Phi(a_S) Phi^{-1}(a_J).
template <Scalar S>
Functional<S> character_inverse(const Functional<S>& phi) {
  detail::require_character(phi, "character_inverse");
  WordTable<S> inv(phi.vars(), phi.order());
  for (const Word& w : inv.words()) {
    S sum(Rational(0));
    for_each_split(Monomial(w), SplitKind::full, [&](const Monomial& left, const Monomial& right) {
      if (left.is_unit()) return;
      sum = sum - phi(left) * detail::character_value(inv, right);
    });
    inv.set(w, sum);
  }
  return Functional<S>::character(std::move(inv));
}

/// E_prec(alpha), E_succ(alpha) or exp_star(alpha) of an infinitesimal character.
template <Scalar S>
Functional<S> hs_exp(const Functional<S>& alpha, ProductKind kind) {
  detail::require_infinitesimal(alpha, "hs_exp");
  const int k = alpha.vars(), order = alpha.order();
  if (kind == ProductKind::star) {
    // sum_j alpha^{*j} / j!; alpha^{*j} vanishes on words shorter than j.
    Functional<S> power = Functional<S>::counit(k, order);
    std::vector<std::pair<S, Functional<S>>> terms{{S(Rational(1)), power}};
    for (int j = 1; j <= order; ++j) {
      power = star(power, alpha);
      terms.emplace_back(S(Rational(1 / factorial(j))), power);
    }
    return linear_combination(terms).as_character();
  }

  WordTable<S> e(k, order);
  for (const Word& w : e.words()) {
    S sum(Rational(0));
    if (kind == ProductKind::prec) {
      // Phi = epsilon + alpha < Phi
      for_each_split(Monomial(w), SplitKind::prec, [&](const Monomial& left, const Monomial& right) {
        sum = sum + alpha(left) * detail::character_value(e, right);
      });
    } else {
      // Phi = epsilon + Phi > alpha
      for_each_split(Monomial(w), SplitKind::succ, [&](const Monomial& left, const Monomial& right) {
        S a = alpha(right);
        if (!is_zero(a)) sum = sum + detail::character_value(e, left) * a;
      });
    }
    e.set(w, sum);
  }
  return Functional<S>::character(std::move(e));
}

/// Inverse of hs_exp for the same kind: L_prec, L_succ or log_star.
template <Scalar S>
Functional<S> hs_log(const Functional<S>& phi, ProductKind kind) {
  detail::require_character(phi, "hs_log");
  const int k = phi.vars(), order = phi.order();
  if (kind == ProductKind::star) {
    // sum_j (-1)^{j+1}/j (Phi - epsilon)^{*j}
    Functional<S> x = phi - Functional<S>::counit(k, order);
    Functional<S> power = x;
    std::vector<std::pair<S, Functional<S>>> terms{{S(Rational(1)), x}};
    for (int j = 2; j <= order; ++j) {
      power = star(power, x);
      terms.emplace_back(S(frac(j % 2 == 0 ? -1 : 1, j)), power);
    }
    return linear_combination(terms).as_infinitesimal();
  }

  WordTable<S> c(k, order);
  for (const Word& w : c.words()) {
    S sum = phi(w);
    if (kind == ProductKind::prec) {
      // kappa(w) = Phi(w) - sum_{1 in S, S != [n]} kappa(a_S) Phi(a_J)
      for_each_split(Monomial(w), SplitKind::prec, [&](const Monomial& left, const Monomial& right) {
        if (right.is_unit()) return;
        sum = sum - detail::infinitesimal_value(c, left) * phi(right);
      });
    } else {
      // beta(w) = Phi(w) - sum_{1 notin S, S != {}} Phi(a_S) beta(a_J)
      for_each_split(Monomial(w), SplitKind::succ, [&](const Monomial& left, const Monomial& right) {
        if (left.is_unit() || right.bar_count() != 1) return;
        sum = sum - phi(left) * detail::infinitesimal_value(c, right);
      });
    }
    c.set(w, sum);
  }
  return Functional<S>::infinitesimal(std::move(c));
}

/// Shuffle adjoint theta_Psi(alpha) = Psi^{-1} > alpha < Psi.
template <Scalar S>
Functional<S> adjoint(const Functional<S>& psi, const Functional<S>& alpha) {
  detail::require_character(psi, "adjoint");
  detail::require_infinitesimal(alpha, "adjoint");
  return succ(character_inverse(psi), prec(alpha, psi)).as_infinitesimal();
}

/// Left pre-Lie product alpha |> beta = alpha > beta - beta < alpha.
template <Scalar S>
Functional<S> prelie(const Functional<S>& alpha, const Functional<S>& beta) {
  detail::require_infinitesimal(alpha, "prelie");
  detail::require_infinitesimal(beta, "prelie");
  return (succ(alpha, beta) - prec(beta, alpha)).as_infinitesimal();
}

/// Commutator alpha * beta - beta * alpha of infinitesimal characters.
template <Scalar S>
Functional<S> commutator(const Functional<S>& alpha, const Functional<S>& beta) {
  detail::require_infinitesimal(alpha, "commutator");
  detail::require_infinitesimal(beta, "commutator");
  return (star(alpha, beta) - star(beta, alpha)).as_infinitesimal();
}

/// Pre-Lie Magnus expansion Omega'(kappa) = sum_n B_n/n! l^{(n)}_{Omega'|>}(kappa),
/// iterated to its fixed point. Each round fixes one more word length.
template <Scalar S>
Functional<S> magnus(const Functional<S>& kappa) {
  detail::require_infinitesimal(kappa, "magnus");
  const int order = kappa.order();
  const auto b = bernoulli_numbers(order);
  Functional<S> omega = kappa;
  for (int round = 1; round < order; ++round) {
    std::vector<std::pair<S, Functional<S>>> terms{{S(Rational(1)), kappa}};
    Functional<S> nested = kappa;
    for (int n = 1; n < order; ++n) {
      nested = prelie(omega, nested);
      if (is_zero(b[n])) continue;
      terms.emplace_back(S(Rational(b[n] / factorial(n))), nested);
    }
    omega = linear_combination(terms);
  }
  return omega;
}

/// Compositional inverse of magnus: W(x) = sum_n 1/(n+1)! l^{(n)}_{x|>}(x).
template <Scalar S>
Functional<S> magnus_inverse(const Functional<S>& x) {
  detail::require_infinitesimal(x, "magnus_inverse");
  std::vector<std::pair<S, Functional<S>>> terms{{S(Rational(1)), x}};
  Functional<S> nested = x;
  for (int n = 1; n < x.order(); ++n) {
    nested = prelie(x, nested);
    terms.emplace_back(S(Rational(1 / factorial(n + 1))), nested);
  }
  return linear_combination(terms);
}

/// W_rho(x) = sum_n (-1)^n/(n+1)! Ad_rho^n(x), Ad_rho(x) = rho * x - x * rho.
template <Scalar S>
Functional<S> w_rho(const Functional<S>& rho, const Functional<S>& x) {
  detail::require_infinitesimal(x, "w_rho");
  std::vector<std::pair<S, Functional<S>>> terms{{S(Rational(1)), x}};
  Functional<S> nested = x;
  for (int n = 1; n < x.order(); ++n) {
    nested = commutator(rho, nested);
    Rational c = 1 / factorial(n + 1);
    if (n % 2 == 1) c = -c;
    terms.emplace_back(S(c), nested);
  }
  return linear_combination(terms);
}

/// Inverse of w_rho in x: sum_n (-1)^n B_n/n! Ad_rho^n(y), the series of
/// z/(1 - e^{-z}).
template <Scalar S>
Functional<S> w_rho_inverse(const Functional<S>& rho, const Functional<S>& y) {
  detail::require_infinitesimal(y, "w_rho_inverse");
  const auto b = bernoulli_numbers(y.order());
  std::vector<std::pair<S, Functional<S>>> terms{{S(Rational(1)), y}};
  Functional<S> nested = y;
  for (int n = 1; n < y.order(); ++n) {
    nested = commutator(rho, nested);
    Rational c = b[n] / factorial(n);
    if (n % 2 == 1) c = -c;
    if (!is_zero(c)) terms.emplace_back(S(c), nested);
  }
  return linear_combination(terms);
}

/// Right action Psi1 box|- Psi2 = E_prec(theta_{Psi2}(L_prec(Psi1))).
template <Scalar S>
Functional<S> box_right(const Functional<S>& psi1, const Functional<S>& psi2) {
  return hs_exp(adjoint(psi2, hs_log(psi1, ProductKind::prec)), ProductKind::prec);
}

/// Left action Psi1 box-| Psi2 = E_succ(theta_{Psi1^{-1}}(L_succ(Psi2))).
template <Scalar S>
Functional<S> box_left(const Functional<S>& psi1, const Functional<S>& psi2) {
  return hs_exp(adjoint(character_inverse(psi1), hs_log(psi2, ProductKind::succ)), ProductKind::succ);
}

/// Character of a law: Phi~(w) = phi~(w), multiplicative over bars.
inline Functional<GScalar> law_character(const Law& law) { return Functional<GScalar>::character(law); }

struct ShuffleCumulants {
  CumulantTable free, boolean, monotone;
};

/// Free, Boolean and monotone Grassmann cumulants as the word values of
/// L_prec, L_succ and log_star of the law's character.
inline ShuffleCumulants cumulants_via_shuffle(const Law& law) {
  auto phi = law_character(law);
  return {{CumulantFamily::free, hs_log(phi, ProductKind::prec).word_values()},
          {CumulantFamily::boolean, hs_log(phi, ProductKind::succ).word_values()},
          {CumulantFamily::monotone, hs_log(phi, ProductKind::star).word_values()}};
}

}  // namespace ncc
