#pragma once

#include <vector>

#include "ncc/errors.hpp"
#include "ncc/law.hpp"
#include "ncc/partition.hpp"

namespace ncc {

namespace detail {

template <Scalar S>
S sign_scalar(std::size_t blocks) {
  return S(Rational(blocks % 2 == 1 ? 1 : -1));  // (-1)^(|pi|-1)
}

inline PartitionFamily moment_family(CumulantFamily f) {
  switch (f) {
    case CumulantFamily::free: return PartitionFamily::noncrossing;
    case CumulantFamily::boolean: return PartitionFamily::interval;
    case CumulantFamily::monotone: return PartitionFamily::noncrossing;
  }
  return PartitionFamily::noncrossing;
}

/// Coefficient of c_pi in the moment formula of the family.
template <Scalar S>
S moment_weight(CumulantFamily f, const Partition& pi) {
  if (f == CumulantFamily::monotone) return S(inverse_tree_factorial(pi));
  return S(Rational(1));
}

}  // namespace detail

/// phi~(w) = sum over NC(n) (free), I(n) (Boolean) or NC(n) weighted by
/// 1/tau(pi)! (monotone) of the multiplicative extension of the cumulants.
template <Scalar S>
WordTable<S> cumulants_to_moments(const BasicCumulantTable<S>& table) {
  const auto& c = table.values;
  WordTable<S> out(c.vars(), c.order());
  for (int n = 1; n <= c.order(); ++n) {
    const auto& parts = cached_partitions(n, detail::moment_family(table.family));
    std::vector<S> weights;
    weights.reserve(parts.size());
    for (const auto& pi : parts) weights.push_back(detail::moment_weight<S>(table.family, pi));
    for (const Word& w : words_of_length(c.vars(), n)) {
      S sum(Rational(0));
      for (std::size_t i = 0; i < parts.size(); ++i) sum = sum + weights[i] * extend_over_partition(c, parts[i], w);
      out.set(w, sum);
    }
  }
  return out;
}

/// Inverse of cumulants_to_moments. Free cumulants by Moebius inversion over
/// NC(n), Boolean cumulants by the signed interval sum, monotone cumulants by
/// solving the triangular moment formula length by length.
template <Scalar S>
BasicCumulantTable<S> moments_to_cumulants(const WordTable<S>& law, CumulantFamily family) {
  BasicCumulantTable<S> out{family, WordTable<S>(law.vars(), law.order())};
  auto& c = out.values;
  for (int n = 1; n <= law.order(); ++n) {
    switch (family) {
      case CumulantFamily::free: {
        const auto& parts = cached_partitions(n, PartitionFamily::noncrossing);
        std::vector<S> mob;
        mob.reserve(parts.size());
        for (const auto& pi : parts) mob.push_back(S(Rational(static_cast<long>(mobius_to_top(pi)))));
        for (const Word& w : words_of_length(law.vars(), n)) {
          S sum(Rational(0));
          for (std::size_t i = 0; i < parts.size(); ++i) sum = sum + mob[i] * extend_over_partition(law, parts[i], w);
          c.set(w, sum);
        }
        break;
      }
      case CumulantFamily::boolean: {
        const auto& parts = cached_partitions(n, PartitionFamily::interval);
        for (const Word& w : words_of_length(law.vars(), n)) {
          S sum(Rational(0));
          for (const auto& pi : parts)
            sum = sum + detail::sign_scalar<S>(pi.block_count()) * extend_over_partition(law, pi, w);
          c.set(w, sum);
        }
        break;
      }
      case CumulantFamily::monotone: {
        // h~(w) = phi~(w) - sum_{pi != 1_n} h~_pi / tau(pi)!; every block of
        // pi != 1_n is shorter than w, so those entries are already known.
        const auto& parts = cached_partitions(n, PartitionFamily::noncrossing);
        for (const Word& w : words_of_length(law.vars(), n)) {
          S sum = law.at(w);
          for (const auto& pi : parts) {
            if (pi.block_count() == 1) continue;
            sum = sum - S(inverse_tree_factorial(pi)) * extend_over_partition(c, pi, w);
          }
          c.set(w, sum);
        }
        break;
      }
    }
  }
  return out;
}

/// Cumulant-to-cumulant relations. Free <-> Boolean and monotone -> free or
/// Boolean are sums over irreducible non-crossing partitions; a monotone
/// target is reached through the moments.
template <Scalar S>
BasicCumulantTable<S> cumulant_to_cumulant(const BasicCumulantTable<S>& table, CumulantFamily target) {
  if (table.family == target) throw DomainError("source and target cumulant families coincide");
  if (target == CumulantFamily::monotone) return moments_to_cumulants(cumulants_to_moments(table), target);

  const auto& src = table.values;
  BasicCumulantTable<S> out{target, WordTable<S>(src.vars(), src.order())};
  for (int n = 1; n <= src.order(); ++n) {
    const auto& parts = cached_partitions(n, PartitionFamily::irreducible_nc);
    std::vector<S> weights;
    weights.reserve(parts.size());
    for (const auto& pi : parts) {
      S wgt(Rational(1));
      if (table.family == CumulantFamily::monotone) wgt = S(inverse_tree_factorial(pi));
      // free -> boolean carries no sign; boolean -> free and monotone -> free do.
      bool signed_sum = target == CumulantFamily::free;
      if (signed_sum) wgt = detail::sign_scalar<S>(pi.block_count()) * wgt;
      weights.push_back(wgt);
    }
    for (const Word& w : words_of_length(src.vars(), n)) {
      S sum(Rational(0));
      for (std::size_t i = 0; i < parts.size(); ++i) sum = sum + weights[i] * extend_over_partition(src, parts[i], w);
      out.values.set(w, sum);
    }
  }
  return out;
}

}  // namespace ncc
