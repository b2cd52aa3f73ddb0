// Acceptance checks. Prints one PASS/FAIL line per criterion after the
// gtest run. All comparisons are exact.
#include <gtest/gtest.h>

#include <array>
#include <iostream>
#include <optional>

#include "ncc/ncc.hpp"

using namespace ncc;

namespace {

struct Criterion {
  const char* title;
  std::optional<bool> passed;
};

std::array<Criterion, 11> criteria{{
    {"free soul of phi~(a^4) from symbolic free cumulants", {}},
    {"monotone coefficients 5/2, 13/3, 26/3", {}},
    {"partition and shuffle engines agree on 50 seeded laws (k <= 2, N = 5)", {}},
    {"infinitesimal cumulant relations via irreducible d-sums (n <= 6)", {}},
    {"moment/cumulant and free/Boolean round trips (N <= 6)", {}},
    {"shuffle axioms, pre-Lie, E_prec inverse, theta composition, adjoint expansions", {}},
    {"Magnus operator up to grade 5 and printed coefficients", {}},
    {"Bercovici-Pata semigroup (N = 6) and shuffle form", {}},
    {"generating series identities (order 5 for k = 1, order 4 for k = 2)", {}},
    {"partition layer: Catalan, labelings, binomial counts, alternating sums, Mobius", {}},
    {"independence joins: factorisation and vanishing mixed cumulants (N = 5)", {}},
}};

void record(int n, bool ok) { criteria[n - 1].passed = ok; }

using G = Grassmann<Polynomial>;

// Body of a^n is x_{n-1}, soul is x_{N+n-1}.
WordTable<G> symbolic_univariate(int order) {
  WordTable<G> t(1, order);
  for (int n = 1; n <= order; ++n)
    t.set(power_word(n), G(Polynomial::variable(n - 1), Polynomial::variable(order + n - 1)));
  return t;
}

Polynomial::Exponents exps(std::initializer_list<std::pair<unsigned, unsigned>> powers) {
  Polynomial::Exponents e;
  for (auto [var, pow] : powers) {
    if (e.size() <= var) e.resize(var + 1, 0);
    e[var] += pow;
  }
  return e;
}

void expect_suite(const std::vector<CheckResult>& results, const std::vector<std::string>& only = {}) {
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) {
    if (!only.empty() && std::find(only.begin(), only.end(), r.property) == only.end()) continue;
    EXPECT_TRUE(r.passed) << r.suite << '.' << r.property << " [" << r.anchor << "] " << r.detail;
  }
}

Law seeded_law(int i, int order) {
  Rng rng(1000 + static_cast<std::uint64_t>(i));
  return random_law(1 + i % 2, order, rng);
}

}  // namespace

TEST(Acceptance, Criterion01) {
  const int N = 4;
  auto m = cumulants_to_moments(BasicCumulantTable<G>{CumulantFamily::free, symbolic_univariate(N)});
  const Polynomial& soul = m.at(power_word(4)).soul;
  // r'_i is x_{N+i-1}, r_i is x_{i-1}
  std::map<Polynomial::Exponents, Rational> expected{
      {exps({{7, 1}}), 1},
      {exps({{5, 1}, {1, 1}}), 4},
      {exps({{6, 1}, {0, 1}}), 4},
      {exps({{4, 1}, {2, 1}}), 4},
      {exps({{5, 1}, {0, 2}}), 6},
      {exps({{4, 1}, {1, 1}, {0, 1}}), 12},
      {exps({{4, 1}, {0, 3}}), 4},
  };
  EXPECT_EQ(soul.terms().size(), expected.size()) << soul.to_string();
  for (const auto& [e, c] : expected) EXPECT_EQ(soul.coefficient(e), c) << soul.to_string();
  record(1, !HasFailure());
}

TEST(Acceptance, Criterion02) {
  const int N = 4;
  auto m = cumulants_to_moments(BasicCumulantTable<G>{CumulantFamily::monotone, symbolic_univariate(N)});
  EXPECT_EQ(m.at(power_word(3)).body.coefficient(exps({{0, 1}, {1, 1}})), frac(5, 2));
  const Polynomial& soul4 = m.at(power_word(4)).soul;
  EXPECT_EQ(soul4.coefficient(exps({{5, 1}, {0, 2}})), frac(13, 3)) << soul4.to_string();
  EXPECT_EQ(soul4.coefficient(exps({{1, 1}, {4, 1}, {0, 1}})), frac(26, 3)) << soul4.to_string();
  record(2, !HasFailure());
}

TEST(Acceptance, Criterion03) {
  for (int i = 0; i < 50; ++i) {
    Law law = seeded_law(i, 5);
    auto sh = cumulants_via_shuffle(law);
    EXPECT_EQ(sh.free, moments_to_cumulants(law, CumulantFamily::free)) << "law " << i;
    EXPECT_EQ(sh.boolean, moments_to_cumulants(law, CumulantFamily::boolean)) << "law " << i;
    EXPECT_EQ(sh.monotone, moments_to_cumulants(law, CumulantFamily::monotone)) << "law " << i;
  }
  record(3, !HasFailure());
}

TEST(Acceptance, Criterion04) {
  for (int i = 0; i < 50; ++i) {
    Law law = seeded_law(i, 6);
    auto r = moments_to_cumulants(law, CumulantFamily::free).values;
    auto b = moments_to_cumulants(law, CumulantFamily::boolean).values;
    auto h = moments_to_cumulants(law, CumulantFamily::monotone).values;
    auto rb = body_of(r), rs = soul_of(r), bb = body_of(b), bs = soul_of(b), hb = body_of(h);
    auto hs = soul_of(h);
    auto relation = [&](const WordTable<Rational>& expected, const WordTable<Rational>& f,
                        const WordTable<Rational>& df, bool alternating, bool tree_weight) {
      for (const Word& w : expected.words()) {
        Rational sum = 0;
        for (const auto& pi : cached_partitions(static_cast<int>(w.size()), PartitionFamily::irreducible_nc)) {
          Rational term = derivative_over_partition(f, df, pi, w);
          if (alternating && pi.block_count() % 2 == 0) term = -term;
          if (tree_weight) term *= inverse_tree_factorial(pi);
          sum += term;
        }
        if (sum != expected.at(w)) return "word '" + w.to_string() + "'";
      }
      return std::string();
    };
    EXPECT_EQ(relation(bs, rb, rs, false, false), "") << "b' from r, law " << i;
    EXPECT_EQ(relation(rs, bb, bs, true, false), "") << "r' from b, law " << i;
    EXPECT_EQ(relation(bs, hb, hs, false, true), "") << "b' from h, law " << i;
    EXPECT_EQ(relation(rs, hb, hs, true, true), "") << "r' from h, law " << i;
  }
  VerifyOptions opt;
  opt.order = 5;
  opt.samples = 2;
  expect_suite(verify_thm1_relations(opt));
  record(4, !HasFailure());
}

TEST(Acceptance, Criterion05) {
  for (int N = 1; N <= 6; ++N) {
    VerifyOptions opt;
    opt.order = N;
    opt.seed = 50 + N;
    opt.samples = 2;
    expect_suite(verify_roundtrips(opt));
  }
  record(5, !HasFailure());
}

TEST(Acceptance, Criterion06) {
  VerifyOptions opt;
  opt.order = 5;
  opt.seed = 11;
  expect_suite(verify_shuffle_axioms(opt));
  expect_suite(verify_lemma_adjoint(opt));
  record(6, !HasFailure());
}

TEST(Acceptance, Criterion07) {
  VerifyOptions opt;
  opt.order = 5;
  opt.seed = 12;
  expect_suite(verify_magnus(opt));
  record(7, !HasFailure());
}

TEST(Acceptance, Criterion08) {
  VerifyOptions opt;
  opt.order = 6;
  opt.seed = 13;
  opt.samples = 2;
  expect_suite(verify_bp_semigroup(opt));
  record(8, !HasFailure());
}

TEST(Acceptance, Criterion09) {
  VerifyOptions opt;
  opt.order = 5;
  opt.seed = 14;
  auto results = verify_series_identity(opt);
  expect_suite(results);
  for (int i = 0; i < 3; ++i) {
    Rng rng(200 + static_cast<std::uint64_t>(i));
    auto r1 = eta_series_check(random_law(1, 5, rng), 5);
    EXPECT_TRUE(r1.ok()) << r1.first_mismatch;
    auto r2 = eta_series_check(random_law(2, 4, rng), 4);
    EXPECT_TRUE(r2.ok()) << r2.first_mismatch;
  }
  record(9, !HasFailure());
}

TEST(Acceptance, Criterion10) {
  VerifyOptions opt;
  opt.order = 7;
  expect_suite(verify_partitions(opt), {"catalan", "monotone-labelings", "count-above", "mobius-bottom"});

  // Alternating sum over 1_n >> pi >> sigma, brute force against the stated
  // closed form (-1)^{|sigma|-1}.
  const auto top = [](int n) { return Partition::coarsest(n); };
  for (int n = 1; n <= 6; ++n) {
    for (const auto& sigma : cached_partitions(n, PartitionFamily::irreducible_nc)) {
      long sum = 0;
      for (const auto& pi : cached_partitions(n, PartitionFamily::noncrossing))
        if (compare(sigma, pi, PartitionOrder::minmax) && compare(pi, top(n), PartitionOrder::minmax))
          sum += pi.block_count() % 2 == 1 ? 1 : -1;
      const long stated = sigma.block_count() % 2 == 1 ? 1 : -1;
      EXPECT_EQ(sum, stated) << "sigma = " << sigma.to_string();
      if (sum != stated) break;
    }
  }
  record(10, !HasFailure());
}

TEST(Acceptance, Criterion11) {
  VerifyOptions opt;
  opt.order = 5;
  opt.seed = 15;
  expect_suite(verify_convolutions(opt),
               {"join-mixed-cumulants.boolean", "join-mixed-cumulants.free", "join-marginals.boolean",
                "join-marginals.free", "boolean-join-factorises", "free-join-centered", "free-join-infinitesimal"});
  record(11, !HasFailure());
}

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  int rc = RUN_ALL_TESTS();
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = criteria[i].passed.value_or(false);
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].title << '\n';
  }
  return all && rc == 0 ? 0 : 1;
}
