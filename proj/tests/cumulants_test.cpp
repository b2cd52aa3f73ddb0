#include <gtest/gtest.h>

#include "ncc/cumulants.hpp"
#include "ncc/polynomial.hpp"
#include "ncc/random.hpp"

using namespace ncc;

namespace {

using G = Grassmann<Polynomial>;
using SymTable = WordTable<G>;

// Univariate table with body x_{n-1} and soul x_{N+n-1} on a^n.
SymTable symbolic_univariate(int order) {
  SymTable t(1, order);
  for (int n = 1; n <= order; ++n)
    t.set(power_word(n), G(Polynomial::variable(n - 1), Polynomial::variable(order + n - 1)));
  return t;
}

// c_{i1} c_{i2} ... (1-based lengths), with a primed factor at `primed` if >= 0.
Polynomial term(int order, std::initializer_list<int> lengths, int primed, const Rational& coeff) {
  Polynomial p(coeff);
  int idx = 0;
  for (int len : lengths) {
    unsigned var = static_cast<unsigned>(len - 1 + (idx == primed ? order : 0));
    p *= Polynomial::variable(var);
    ++idx;
  }
  return p;
}

}  // namespace

TEST(Cumulants, SecondOrderExamples) {
  Law law(1, 2);
  GScalar m1(frac(1, 3), 2), m2(5, frac(-1, 2));
  law.set(Word{1}, m1);
  law.set(Word{1, 1}, m2);
  for (auto fam : {CumulantFamily::free, CumulantFamily::boolean, CumulantFamily::monotone}) {
    auto c = moments_to_cumulants(law, fam);
    EXPECT_EQ(c.values.at(Word{1}), m1);
    EXPECT_EQ(c.values.at(Word{1, 1}), m2 - m1 * m1) << to_string(fam);
  }
}

TEST(Cumulants, CenteredMonotoneThirdOrder) {
  Rng rng(1);
  Law law = random_law(1, 3, rng);
  law.set(Word{1}, GScalar());
  EXPECT_EQ(moments_to_cumulants(law, CumulantFamily::monotone).values.at(Word{1, 1, 1}), law.at(Word{1, 1, 1}));
}

TEST(Cumulants, FirstOrderCoincide) {
  Rng rng(8);
  Law law = random_law(2, 3, rng);
  for (auto fam : {CumulantFamily::free, CumulantFamily::boolean, CumulantFamily::monotone}) {
    auto c = moments_to_cumulants(law, fam);
    EXPECT_EQ(c.values.at(Word{1}), law.at(Word{1}));
    EXPECT_EQ(c.values.at(Word{2}), law.at(Word{2}));
    EXPECT_EQ(cumulants_to_moments(CumulantTable{fam, law}).at(Word{2}), law.at(Word{2}));
  }
}

TEST(Cumulants, SymbolicFreeSoulOfFourthMoment) {
  const int N = 4;
  auto m = cumulants_to_moments(BasicCumulantTable<G>{CumulantFamily::free, symbolic_univariate(N)});
  Polynomial expected = term(N, {4}, 0, 1) + term(N, {2, 2}, 0, 4) + term(N, {3, 1}, 0, 4) + term(N, {1, 3}, 0, 4) +
                        term(N, {2, 1, 1}, 0, 6) + term(N, {1, 2, 1}, 0, 12) + term(N, {1, 1, 1, 1}, 0, 4);
  EXPECT_EQ(m.at(power_word(4)).soul, expected) << m.at(power_word(4)).soul.to_string();
}

TEST(Cumulants, SymbolicMonotoneExpansions) {
  const int N = 4;
  auto m = cumulants_to_moments(BasicCumulantTable<G>{CumulantFamily::monotone, symbolic_univariate(N)});
  Polynomial body3 = term(N, {3}, -1, 1) + term(N, {1, 2}, -1, frac(5, 2)) + term(N, {1, 1, 1}, -1, 1);
  EXPECT_EQ(m.at(power_word(3)).body, body3);
  Polynomial soul3 = term(N, {3}, 0, 1) + term(N, {1, 2}, 0, frac(5, 2)) + term(N, {1, 2}, 1, frac(5, 2)) +
                     term(N, {1, 1, 1}, 0, 3);
  EXPECT_EQ(m.at(power_word(3)).soul, soul3);
  Polynomial soul4 = term(N, {4}, 0, 1) + term(N, {3, 1}, 0, 3) + term(N, {3, 1}, 1, 3) + term(N, {2, 2}, 0, 3) +
                     term(N, {2, 1, 1}, 0, frac(13, 3)) + term(N, {2, 1, 1}, 1, frac(26, 3)) +
                     term(N, {1, 1, 1, 1}, 0, 4);
  EXPECT_EQ(m.at(power_word(4)).soul, soul4) << m.at(power_word(4)).soul.to_string();
}

TEST(Cumulants, SymbolicConversions) {
  const int N = 3;
  auto r = symbolic_univariate(N);
  auto b = cumulant_to_cumulant(BasicCumulantTable<G>{CumulantFamily::free, r}, CumulantFamily::boolean).values;
  EXPECT_EQ(b.at(Word{1, 1}), r.at(Word{1, 1}));
  EXPECT_EQ(b.at(power_word(3)).body, term(N, {3}, -1, 1) + term(N, {1, 2}, -1, 1));
  EXPECT_EQ(b.at(power_word(3)).soul, term(N, {3}, 0, 1) + term(N, {1, 2}, 0, 1) + term(N, {1, 2}, 1, 1));

  auto f = cumulant_to_cumulant(BasicCumulantTable<G>{CumulantFamily::monotone, r}, CumulantFamily::free).values;
  EXPECT_EQ(f.at(power_word(3)).body, term(N, {3}, -1, 1) + term(N, {1, 2}, -1, frac(-1, 2)));
  // oracle: monotone -> moments -> free
  auto via = moments_to_cumulants(cumulants_to_moments(BasicCumulantTable<G>{CumulantFamily::monotone, r}),
                                  CumulantFamily::free)
                 .values;
  EXPECT_EQ(f, via);
}

TEST(Cumulants, SameFamilyConversionRejected) {
  CumulantTable t{CumulantFamily::boolean, Law(1, 2)};
  EXPECT_THROW(cumulant_to_cumulant(t, CumulantFamily::boolean), DomainError);
}

TEST(Cumulants, RoundTripsAllFamilies) {
  Rng rng(21);
  for (int k = 1; k <= 2; ++k) {
    const int N = k == 1 ? 6 : 5;
    Law law = random_law(k, N, rng);
    for (auto fam : {CumulantFamily::free, CumulantFamily::boolean, CumulantFamily::monotone}) {
      EXPECT_EQ(cumulants_to_moments(moments_to_cumulants(law, fam)), law);
      CumulantTable c{fam, random_law(k, N, rng)};
      EXPECT_EQ(moments_to_cumulants(cumulants_to_moments(c), fam), c);
    }
  }
}

// Body through GScalar equals the classical formula on the bodies alone; soul
// equals the derivative formula with body/soul tables.
TEST(Cumulants, GrassmannConsistency) {
  Rng rng(13);
  Law law = random_law(2, 4, rng);
  auto mb = body_of(law), ms = soul_of(law);
  for (auto fam : {CumulantFamily::free, CumulantFamily::boolean, CumulantFamily::monotone}) {
    auto c = moments_to_cumulants(law, fam).values;
    auto classical = moments_to_cumulants(mb, fam).values;
    EXPECT_EQ(body_of(c), classical);
    auto cb = body_of(c), cs = soul_of(c);
    for (const Word& w : law.words()) {
      Rational sum = 0;
      for (const auto& pi : cached_partitions(static_cast<int>(w.size()), detail::moment_family(fam))) {
        Rational t = derivative_over_partition(cb, cs, pi, w);
        if (fam == CumulantFamily::monotone) t *= inverse_tree_factorial(pi);
        sum += t;
      }
      EXPECT_EQ(sum, ms.at(w)) << to_string(fam) << " " << w.to_string();
    }
  }
}

TEST(Cumulants, ClosedFormRelations) {
  Rng rng(17);
  Law law = random_law(2, 5, rng);
  auto r = moments_to_cumulants(law, CumulantFamily::free);
  auto b = moments_to_cumulants(law, CumulantFamily::boolean);
  auto h = moments_to_cumulants(law, CumulantFamily::monotone);
  EXPECT_EQ(cumulant_to_cumulant(r, CumulantFamily::boolean), b);
  EXPECT_EQ(cumulant_to_cumulant(b, CumulantFamily::free), r);
  EXPECT_EQ(cumulant_to_cumulant(h, CumulantFamily::boolean), b);
  EXPECT_EQ(cumulant_to_cumulant(h, CumulantFamily::free), r);
  EXPECT_EQ(cumulant_to_cumulant(r, CumulantFamily::monotone), h);
  EXPECT_EQ(cumulant_to_cumulant(b, CumulantFamily::monotone), h);
}

// Monotone moments over labeled monotone partitions with weight 1/|pi|!.
TEST(Cumulants, MonotoneLabeledOracle) {
  Rng rng(23);
  CumulantTable h{CumulantFamily::monotone, random_law(2, 5, rng)};
  Law m = cumulants_to_moments(h);
  for (const Word& w : m.words()) {
    GScalar sum;
    for (const auto& pi : cached_partitions(static_cast<int>(w.size()), PartitionFamily::noncrossing)) {
      auto labelings = static_cast<long>(monotone_labelings(pi).size());
      sum += g_scale(extend_over_partition(h, pi, w), Rational(Rational(labelings) / factorial(pi.block_count())));
    }
    EXPECT_EQ(sum, m.at(w)) << w.to_string();
  }
}
