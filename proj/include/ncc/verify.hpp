#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ncc/convolve.hpp"
#include "ncc/cumulants.hpp"
#include "ncc/law_io.hpp"
#include "ncc/partition.hpp"
#include "ncc/random.hpp"
#include "ncc/shuffle.hpp"

// Named property suites run by `ncc verify`. Every property is checked on
// seeded random data and reported once, failing if any instance fails.

namespace ncc {

struct CheckResult {
  std::string suite;
  std::string property;
  std::string anchor;
  bool passed = true;
  std::string detail;
};

struct VerifyOptions {
  int order = 5;
  std::uint64_t seed = 1;
  int samples = 3;
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void record(const std::string& property, const std::string& anchor, bool ok, const std::string& detail = {}) {
    auto [it, fresh] = index_.try_emplace(property, results_.size());
    if (fresh) results_.push_back({suite_, property, anchor, true, {}});
    auto& r = results_[it->second];
    if (!ok && r.passed) {
      r.passed = false;
      r.detail = detail;
    }
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
  std::map<std::string, std::size_t> index_;
};

template <Scalar S>
std::string word_mismatch(const Functional<S>& f, const Functional<S>& g, int length) {
  if (auto w = first_word_disagreement(f, g, length)) return "word '" + w->to_string() + "'";
  return {};
}

template <Scalar S>
std::string monomial_mismatch(const Functional<S>& f, const Functional<S>& g, int length) {
  if (auto m = first_disagreement(f, g, length)) return "monomial " + m->to_string();
  return {};
}

template <Scalar S>
std::string table_mismatch(const WordTable<S>& a, const WordTable<S>& b) {
  if (a.vars() != b.vars() || a.order() != b.order()) return "shape";
  for (const Word& w : a.words())
    if (a.at(w) != b.at(w)) return "word '" + w.to_string() + "'";
  return {};
}

inline Functional<GScalar> random_infinitesimal(int k, int order, Rng& rng) {
  return Functional<GScalar>::infinitesimal(random_law(k, order, rng));
}

inline int sample_vars(int i) { return 1 + i % 2; }

/// Value of the irreducible-partition sum with outer block alpha and factors f:
/// sum_{pi in NC_irr(n)} sign(pi) alpha(a_{V1}) prod_{W != V1} f(a_W).
inline GScalar outer_block_sum(const Law& alpha, const Law& f, const Word& w, bool alternating) {
  GScalar sum;
  for (const auto& pi : cached_partitions(static_cast<int>(w.size()), PartitionFamily::irreducible_nc)) {
    const auto& blocks = pi.blocks();
    GScalar term = alpha.at(w.restrict(blocks[0]));
    for (std::size_t b = 1; b < blocks.size(); ++b) term *= f.at(w.restrict(blocks[b]));
    if (alternating && blocks.size() % 2 == 0) term = -term;
    sum += term;
  }
  return sum;
}

/// phi~ of a product of polynomials, each a list of (word, coefficient)
/// terms with the empty word standing for the unit.
inline GScalar product_moment(const Law& law, const std::vector<std::vector<std::pair<Word, Rational>>>& factors) {
  GScalar total;
  std::function<void(std::size_t, Word, Rational)> rec = [&](std::size_t i, Word acc, Rational c) {
    if (is_zero(c)) return;
    if (i == factors.size()) {
      GScalar v = acc.empty() ? GScalar(Rational(1)) : law.at(acc);
      total += g_scale(v, c);
      return;
    }
    for (const auto& [w, coeff] : factors[i]) rec(i + 1, acc + w, c * coeff);
  };
  rec(0, Word{}, Rational(1));
  return total;
}

/// Alternating letter sequences over {1, 2} paired with exponents p_j >= 1
/// whose total degree is at most max_degree.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> alternating_patterns(int max_degree) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  std::function<void(std::vector<int>&, std::vector<int>&, int)> rec = [&](std::vector<int>& letters,
                                                                         std::vector<int>& powers, int used) {
    if (!letters.empty()) out.emplace_back(letters, powers);
    for (int l = 1; l <= 2; ++l) {
      if (!letters.empty() && letters.back() == l) continue;
      for (int p = 1; used + p <= max_degree; ++p) {
        letters.push_back(l);
        powers.push_back(p);
        rec(letters, powers, used + p);
        letters.pop_back();
        powers.pop_back();
      }
    }
  };
  std::vector<int> a, b;
  rec(a, b, 0);
  return out;
}

}  // namespace detail

inline std::vector<CheckResult> verify_shuffle_axioms(const VerifyOptions& opt) {
  detail::Recorder rec("shuffle-axioms");
  Rng rng(opt.seed);
  const int generic_len = std::min(opt.order, 4);
  for (int i = 0; i < opt.samples; ++i) {
    const int k = detail::sample_vars(i);
    auto f = random_generic_functional(k, generic_len, rng);
    auto g = random_generic_functional(k, generic_len, rng);
    auto h = random_generic_functional(k, generic_len, rng);
    auto eps = Functional<GScalar>::counit(k, generic_len);

    auto m = detail::monomial_mismatch(prec(prec(f, g), h), prec(f, star(g, h)), generic_len);
    rec.record("a1", "(f<g)<h = f<(g*h)", m.empty(), m);
    m = detail::monomial_mismatch(prec(succ(f, g), h), succ(f, prec(g, h)), generic_len);
    rec.record("a2", "(f>g)<h = f>(g<h)", m.empty(), m);
    m = detail::monomial_mismatch(succ(f, succ(g, h)), succ(star(f, g), h), generic_len);
    rec.record("a3", "f>(g>h) = (f*g)>h", m.empty(), m);
    m = detail::monomial_mismatch(star(f, eps), f, generic_len) + detail::monomial_mismatch(star(eps, f), f, generic_len);
    rec.record("counit", "f*eps = eps*f = f", m.empty(), m);

    bool split_ok = true;
    auto fg = star(f, g), lhs = prec(f, g) + succ(f, g);
    for (const auto& mono : monomials_up_to(k, generic_len))
      if (!mono.is_unit() && fg(mono) != lhs(mono)) split_ok = false;
    rec.record("star-splits", "f*g = f<g + f>g off the unit", split_ok);

    const int n = opt.order;
    auto a = detail::random_infinitesimal(k, n, rng);
    auto b = detail::random_infinitesimal(k, n, rng);
    auto c = detail::random_infinitesimal(k, n, rng);
    auto pl = prelie(prelie(a, b), c) - prelie(a, prelie(b, c));
    auto pr = prelie(prelie(b, a), c) - prelie(b, prelie(a, c));
    m = detail::word_mismatch(pl, pr, n);
    rec.record("left-pre-lie", "(a|>b)|>c - a|>(b|>c) symmetric in a, b", m.empty(), m);
    m = detail::word_mismatch(prelie(a, b) - prelie(b, a), commutator(a, b), n);
    rec.record("lie-admissible", "a|>b - b|>a = a*b - b*a", m.empty(), m);

    m = detail::word_mismatch(character_inverse(hs_exp(a, ProductKind::prec)), hs_exp(-a, ProductKind::succ), n);
    rec.record("inverse-prec", "E_prec(a)^-1 = E_succ(-a)", m.empty(), m);
    m = detail::word_mismatch(character_inverse(hs_exp(a, ProductKind::succ)), hs_exp(-a, ProductKind::prec), n);
    rec.record("inverse-succ", "E_succ(a)^-1 = E_prec(-a)", m.empty(), m);
    for (auto kind : {ProductKind::prec, ProductKind::succ, ProductKind::star}) {
      m = detail::word_mismatch(hs_log(hs_exp(a, kind), kind), a, n);
      rec.record("log-exp", "L(E(a)) = a for E_prec, E_succ, exp_star", m.empty(), m);
    }

    auto phi = law_character(random_law(k, n, rng));
    auto psi = law_character(random_law(k, n, rng));
    auto kappa = hs_log(phi, ProductKind::prec);
    auto beta = hs_log(phi, ProductKind::succ);
    m = detail::word_mismatch(prec(kappa, phi), succ(phi, beta), n);
    rec.record("fixed-points", "kappa<Phi = Phi>beta", m.empty(), m);
    m = detail::word_mismatch(Functional<GScalar>::counit(k, n) + prec(kappa, phi), phi, n) +
        detail::word_mismatch(Functional<GScalar>::counit(k, n) + succ(phi, beta), phi, n);
    rec.record("fixed-point-equations", "Phi = eps + kappa<Phi = eps + Phi>beta", m.empty(), m);
    m = detail::word_mismatch(star(phi, character_inverse(phi)), Functional<GScalar>::counit(k, n), n) +
        detail::word_mismatch(star(character_inverse(phi), phi), Functional<GScalar>::counit(k, n), n);
    rec.record("character-inverse", "Phi * Phi^-1 = Phi^-1 * Phi = eps", m.empty(), m);

    m = detail::word_mismatch(adjoint(psi, adjoint(phi, a)), adjoint(star(phi, psi).as_character(), a), n);
    rec.record("theta-composition", "theta_Psi o theta_Phi = theta_{Phi*Psi}", m.empty(), m);
    m = detail::word_mismatch(adjoint(Functional<GScalar>::counit(k, n), a), a, n);
    rec.record("theta-unit", "theta_eps(a) = a", m.empty(), m);

    bool vanishes = true;
    auto lazy = succ(character_inverse(phi), prec(a, phi));
    for (const auto& mono : monomials_up_to(k, std::min(n, 4)))
      if (mono.bar_count() != 1 && !is_zero(lazy(mono))) vanishes = false;
    rec.record("theta-infinitesimal", "theta_Psi(a) vanishes on the unit and on bar products", vanishes);
  }
  return rec.take();
}

inline std::vector<CheckResult> verify_roundtrips(const VerifyOptions& opt) {
  detail::Recorder rec("roundtrips");
  Rng rng(opt.seed);
  const CumulantFamily families[] = {CumulantFamily::free, CumulantFamily::boolean, CumulantFamily::monotone};
  for (int i = 0; i < opt.samples; ++i) {
    const int k = detail::sample_vars(i);
    Law law = random_law(k, opt.order, rng);
    for (auto fam : families) {
      std::string name(to_string(fam));
      auto c = moments_to_cumulants(law, fam);
      auto m = detail::table_mismatch(cumulants_to_moments(c), law);
      rec.record("moments-cumulants-moments." + name, "phi~ -> " + name + " cumulants -> phi~", m.empty(), m);
      CumulantTable rand{fam, random_law(k, opt.order, rng)};
      auto back = moments_to_cumulants(cumulants_to_moments(rand), fam);
      m = detail::table_mismatch(back.values, rand.values);
      rec.record("cumulants-moments-cumulants." + name, name + " cumulants -> phi~ -> cumulants", m.empty(), m);
    }
    auto r = moments_to_cumulants(law, CumulantFamily::free);
    auto b = moments_to_cumulants(law, CumulantFamily::boolean);
    auto h = moments_to_cumulants(law, CumulantFamily::monotone);

    auto m = detail::table_mismatch(cumulant_to_cumulant(r, CumulantFamily::boolean).values, b.values);
    rec.record("free-to-boolean", "b~ = sum over NC_irr of r~_pi", m.empty(), m);
    m = detail::table_mismatch(cumulant_to_cumulant(b, CumulantFamily::free).values, r.values);
    rec.record("boolean-to-free", "r~ = sum over NC_irr of (-1)^{|pi|-1} b~_pi", m.empty(), m);
    m = detail::table_mismatch(cumulant_to_cumulant(h, CumulantFamily::boolean).values, b.values);
    rec.record("monotone-to-boolean", "b~ = sum over NC_irr of h~_pi / tau(pi)!", m.empty(), m);
    m = detail::table_mismatch(cumulant_to_cumulant(h, CumulantFamily::free).values, r.values);
    rec.record("monotone-to-free", "r~ = sum over NC_irr of (-1)^{|pi|-1} h~_pi / tau(pi)!", m.empty(), m);
    m = detail::table_mismatch(cumulant_to_cumulant(r, CumulantFamily::monotone).values, h.values) +
        detail::table_mismatch(cumulant_to_cumulant(b, CumulantFamily::monotone).values, h.values);
    rec.record("to-monotone", "free or Boolean -> monotone through moments", m.empty(), m);

    CumulantTable rand{CumulantFamily::free, random_law(k, opt.order, rng)};
    m = detail::table_mismatch(
        cumulant_to_cumulant(cumulant_to_cumulant(rand, CumulantFamily::boolean), CumulantFamily::free).values,
        rand.values);
    rec.record("free-boolean-inverse", "free -> Boolean -> free is the identity", m.empty(), m);
    auto via_mono = cumulant_to_cumulant(cumulant_to_cumulant(rand, CumulantFamily::monotone), CumulantFamily::boolean);
    m = detail::table_mismatch(via_mono.values, cumulant_to_cumulant(rand, CumulantFamily::boolean).values);
    rec.record("triangle", "free -> Boolean = (monotone -> Boolean) o (free -> monotone)", m.empty(), m);

    auto sh = cumulants_via_shuffle(law);
    m = detail::table_mismatch(sh.free.values, r.values) + detail::table_mismatch(sh.boolean.values, b.values) +
        detail::table_mismatch(sh.monotone.values, h.values);
    rec.record("engine-equivalence", "L_prec, L_succ, log_star equal the partition formulas", m.empty(), m);

    bool io_ok = law_read(law_write(law)) == law && law_write(law_read(law_write(law))) == law_write(law);
    rec.record("law-io", "law_read(law_write(L)) = L", io_ok);
    bool table_io = cumulant_table_read(cumulant_table_write(h)) == h;
    rec.record("table-io", "cumulant table text round trip", table_io);
  }
  return rec.take();
}

inline std::vector<CheckResult> verify_thm1_relations(const VerifyOptions& opt) {
  detail::Recorder rec("thm1-relations");
  Rng rng(opt.seed);
  for (int i = 0; i < opt.samples; ++i) {
    const int k = detail::sample_vars(i);
    const int n_max = opt.order;
    Law law = random_law(k, n_max, rng);
    auto r = moments_to_cumulants(law, CumulantFamily::free).values;
    auto b = moments_to_cumulants(law, CumulantFamily::boolean).values;
    auto h = moments_to_cumulants(law, CumulantFamily::monotone).values;
    auto rb = body_of(r), rs = soul_of(r), bb = body_of(b), bs = soul_of(b), hb = body_of(h), hs = soul_of(h);
    auto mb = body_of(law), ms = soul_of(law);

    // relation(expected soul table, source body/soul, partition family, sign?, monotone weight?)
    auto check = [&](const std::string& name, const std::string& anchor, const WordTable<Rational>& expected,
                     const WordTable<Rational>& f, const WordTable<Rational>& df, PartitionFamily fam, bool alternating,
                     bool tree_weight) {
      std::string where;
      for (const Word& w : expected.words()) {
        Rational sum = 0;
        for (const auto& pi : cached_partitions(static_cast<int>(w.size()), fam)) {
          Rational term = derivative_over_partition(f, df, pi, w);
          if (alternating && pi.block_count() % 2 == 0) term = -term;
          if (tree_weight) term *= inverse_tree_factorial(pi);
          sum += term;
        }
        if (sum != expected.at(w) && where.empty()) where = "word '" + w.to_string() + "'";
      }
      rec.record(name, anchor, where.empty(), where);
    };
    check("boolean-from-free", "b' = sum over NC_irr of d r_pi", bs, rb, rs, PartitionFamily::irreducible_nc, false,
          false);
    check("free-from-boolean", "r' = sum over NC_irr of (-1)^{|pi|-1} d b_pi", rs, bb, bs,
          PartitionFamily::irreducible_nc, true, false);
    check("boolean-from-monotone", "b' = sum over NC_irr of d h_pi / tau(pi)!", bs, hb, hs,
          PartitionFamily::irreducible_nc, false, true);
    check("free-from-monotone", "r' = sum over NC_irr of (-1)^{|pi|-1} d h_pi / tau(pi)!", rs, hb, hs,
          PartitionFamily::irreducible_nc, true, true);
    check("moments-from-free", "phi' = sum over NC of d r_pi", ms, rb, rs, PartitionFamily::noncrossing, false, false);
    check("moments-from-boolean", "phi' = sum over I of d b_pi", ms, bb, bs, PartitionFamily::interval, false, false);
    check("moments-from-monotone", "phi' = sum over NC of d h_pi / tau(pi)!", ms, hb, hs, PartitionFamily::noncrossing,
          false, true);

    // Body/soul split of the shuffle identities for Phi'.
    auto phi = Functional<Rational>::character(mb);
    auto dphi = Functional<Rational>::derivation(ms, phi);
    auto kappa_s = Functional<Rational>::infinitesimal(rs);
    auto beta_s = Functional<Rational>::infinitesimal(bs);
    auto rho = Functional<Rational>::infinitesimal(hb);
    auto rho_s = Functional<Rational>::infinitesimal(hs);
    auto m = detail::word_mismatch(dphi, star(phi, adjoint(phi, kappa_s)), n_max);
    rec.record("phi-prime-free", "Phi' = Phi * theta_Phi(kappa')", m.empty(), m);
    m = detail::word_mismatch(dphi, star(adjoint(character_inverse(phi), beta_s), phi), n_max);
    rec.record("phi-prime-boolean", "Phi' = theta_{Phi^-1}(beta') * Phi", m.empty(), m);
    m = detail::word_mismatch(dphi, star(phi, w_rho(rho, rho_s)), n_max);
    rec.record("phi-prime-monotone", "Phi' = Phi * W_rho(rho')", m.empty(), m);
    auto y = star(character_inverse(phi), dphi).as_infinitesimal();
    m = detail::word_mismatch(w_rho_inverse(rho, y), rho_s, n_max);
    rec.record("rho-prime-recovery", "rho' = W_rho^{-1}(Phi^-1 * Phi')", m.empty(), m);
  }
  return rec.take();
}

inline std::vector<CheckResult> verify_magnus(const VerifyOptions& opt) {
  detail::Recorder rec("magnus");
  Rng rng(opt.seed);
  const auto b = bernoulli_numbers(6);
  bool bern = b[1] == frac(-1, 2) && b[2] == frac(1, 6) && is_zero(b[3]) && b[4] == frac(-1, 30) && is_zero(b[5]) &&
              b[6] == frac(1, 42);
  rec.record("bernoulli", "B_1..B_6 = -1/2, 1/6, 0, -1/30, 0, 1/42", bern);
  for (int i = 0; i < opt.samples; ++i) {
    const int k = detail::sample_vars(i);
    const int n = opt.order;
    auto phi = law_character(random_law(k, n, rng));
    auto kappa = hs_log(phi, ProductKind::prec);
    auto beta = hs_log(phi, ProductKind::succ);
    auto rho = hs_log(phi, ProductKind::star);
    auto omega = magnus(kappa);
    auto m = detail::word_mismatch(omega, rho, n);
    rec.record("omega-free", "Omega'(kappa) = rho", m.empty(), m);
    m = detail::word_mismatch(-magnus(-beta), rho, n);
    rec.record("omega-boolean", "-Omega'(-beta) = rho", m.empty(), m);
    m = detail::word_mismatch(hs_exp(omega, ProductKind::star), hs_exp(kappa, ProductKind::prec), n);
    rec.record("exp-omega", "exp_star(Omega'(kappa)) = E_prec(kappa)", m.empty(), m);
    m = detail::word_mismatch(magnus_inverse(omega), kappa, n) + detail::word_mismatch(magnus(magnus_inverse(kappa)), kappa, n);
    rec.record("inverse", "W o Omega' = Omega' o W = id", m.empty(), m);

    auto a = detail::random_infinitesimal(k, n, rng);
    auto aa = prelie(a, a);
    auto printed = linear_combination<GScalar>({{GScalar(1), a},
                                                {GScalar(frac(-1, 2)), aa},
                                                {GScalar(frac(1, 4)), prelie(aa, a)},
                                                {GScalar(frac(1, 12)), prelie(a, aa)}});
    m = detail::word_mismatch(magnus(a), printed, std::min(n, 3));
    rec.record("printed-expansion", "Omega'(a) = a - 1/2 a|>a + 1/4 (a|>a)|>a + 1/12 a|>(a|>a) + ...", m.empty(), m);
  }
  return rec.take();
}

inline std::vector<CheckResult> verify_bp_semigroup(const VerifyOptions& opt) {
  detail::Recorder rec("bp-semigroup");
  Rng rng(opt.seed);
  const Rational params[] = {frac(1, 2), Rational(1), Rational(2)};
  for (int i = 0; i < opt.samples; ++i) {
    const int k = detail::sample_vars(i);
    Law mu = random_law(k, opt.order, rng);
    for (const auto& s : params)
      for (const auto& t : params) {
        bool ok = bp_map(bp_map(mu, t), s) == bp_map(mu, s + t);
        rec.record("semigroup", "B_s o B_t = B_{s+t}, s, t in {1/2, 1, 2}", ok,
                   "s=" + to_string(s) + " t=" + to_string(t));
      }
    auto m = detail::table_mismatch(moments_to_cumulants(bp_map(mu, 1), CumulantFamily::free).values,
                                    moments_to_cumulants(mu, CumulantFamily::boolean).values);
    rec.record("free-of-bp-is-boolean", "r~(B(mu)) = b~(mu)", m.empty(), m);
    for (const auto& t : params) {
      m = detail::table_mismatch(bp_map(mu, t), bp_map_shuffle(mu, t));
      rec.record("definition-vs-shuffle", "(mu^{[+]1+t})^{[+]_B 1/(1+t)} = E_prec(theta_{E_prec(t kappa)}(kappa))",
                 m.empty(), m);
    }
    m = detail::table_mismatch(bp_map(mu, 0), mu);
    rec.record("t-zero", "B_0 = id", m.empty(), m);
    m = detail::table_mismatch(bp_map(mu, 1), law_power(law_power(mu, 2, ConvolutionKind::free), frac(1, 2),
                                                        ConvolutionKind::boolean));
    rec.record("t-one", "B_1(mu) = (mu^{[+]2})^{[+]_B 1/2}", m.empty(), m);
    m = detail::table_mismatch(bp_inverse(bp_map(mu, 1)), mu) + detail::table_mismatch(bp_map(bp_inverse(mu), 1), mu);
    rec.record("inverse", "B^{-1} = E_succ o L_prec inverts B", m.empty(), m);
  }
  return rec.take();
}

inline std::vector<CheckResult> verify_convolutions(const VerifyOptions& opt) {
  detail::Recorder rec("convolutions");
  Rng rng(opt.seed);
  for (int i = 0; i < opt.samples; ++i) {
    const int k = detail::sample_vars(i);
    const int n = opt.order;
    Law mu = random_law(k, n, rng), nu = random_law(k, n, rng), xi = random_law(k, n, rng);
    for (auto kind : {ConvolutionKind::free, ConvolutionKind::boolean}) {
      std::string name(to_string(kind));
      rec.record("commutative." + name, name + " convolution is commutative",
                 convolve_laws(mu, nu, kind) == convolve_laws(nu, mu, kind));
      rec.record("associative." + name, name + " convolution is associative",
                 convolve_laws(convolve_laws(mu, nu, kind), xi, kind) ==
                     convolve_laws(mu, convolve_laws(nu, xi, kind), kind));
      rec.record("identity." + name, "mu with the zero-cumulant law gives mu",
                 convolve_laws(mu, Law(k, n), kind) == mu);
      rec.record("power-additive." + name, "mu^s with mu^t gives mu^{s+t}",
                 convolve_laws(law_power(mu, frac(1, 3), kind), law_power(mu, frac(3, 2), kind), kind) ==
                     law_power(mu, frac(11, 6), kind));
      rec.record("power-one-zero." + name, "mu^1 = mu, mu^0 = zero-cumulant law",
                 law_power(mu, 1, kind) == mu && law_power(mu, 0, kind) == Law(k, n));
    }
    auto phi1 = law_character(mu), phi2 = law_character(nu);
    auto free_sum = convolve_laws(mu, nu, ConvolutionKind::free);
    auto bool_sum = convolve_laws(mu, nu, ConvolutionKind::boolean);
    auto m = detail::table_mismatch(
        hs_exp(hs_log(phi1, ProductKind::prec) + hs_log(phi2, ProductKind::prec), ProductKind::prec).word_values(),
        free_sum);
    rec.record("free-shuffle-form", "Psi1 [+] Psi2 = E_prec(kappa1 + kappa2)", m.empty(), m);
    m = detail::table_mismatch(
        hs_exp(hs_log(phi1, ProductKind::succ) + hs_log(phi2, ProductKind::succ), ProductKind::succ).word_values(),
        bool_sum);
    rec.record("boolean-shuffle-form", "Psi1 [+]_B Psi2 = E_succ(beta1 + beta2)", m.empty(), m);
    m = detail::table_mismatch(star(phi1, box_right(phi2, phi1)).word_values(), free_sum);
    rec.record("free-subordination", "Psi1 [+] Psi2 = Psi1 * (Psi2 box|- Psi1)", m.empty(), m);
    m = detail::table_mismatch(star(box_left(phi2, phi1), phi2).word_values(), bool_sum);
    rec.record("boolean-subordination", "Psi1 [+]_B Psi2 = (Psi2 box-| Psi1) * Psi2", m.empty(), m);
    auto psi3 = law_character(xi);
    m = detail::table_mismatch(box_right(box_right(phi1, phi2), psi3).word_values(),
                               box_right(phi1, star(phi2, psi3).as_character()).word_values());
    rec.record("box-action", "(Psi1 box|- Psi2) box|- Psi3 = Psi1 box|- (Psi2 * Psi3)", m.empty(), m);

    // Joins of univariate laws.
    Law x = random_law(1, n, rng), y = random_law(1, n, rng);
    for (auto kind : {ConvolutionKind::boolean, ConvolutionKind::free}) {
      std::string name(to_string(kind));
      Law joint = join_independent(x, y, kind);
      auto c = moments_to_cumulants(joint, family_of(kind)).values;
      bool mixed_zero = true, pure_ok = true;
      for (const Word& w : c.words()) {
        bool has1 = std::count(w.begin(), w.end(), 1) > 0, has2 = std::count(w.begin(), w.end(), 2) > 0;
        if (has1 && has2 && !is_zero(c.at(w))) mixed_zero = false;
        if (!has2 && joint.at(w) != x.at(power_word(static_cast<int>(w.size())))) pure_ok = false;
        if (!has1 && joint.at(w) != y.at(power_word(static_cast<int>(w.size())))) pure_ok = false;
      }
      rec.record("join-mixed-cumulants." + name, "mixed " + name + " Grassmann cumulants of the join vanish", mixed_zero);
      rec.record("join-marginals." + name, "the join restricts to its inputs", pure_ok);
    }
    Law bj = join_independent(x, y, ConvolutionKind::boolean);
    bool ibi = true;
    for (const Word& w : bj.words()) {
      bool alternating = true;
      for (std::size_t j = 1; j < w.size(); ++j) alternating = alternating && w[j] != w[j - 1];
      if (!alternating) continue;
      GScalar prod(Rational(1));
      for (int l : w) prod *= bj.at(Word{l});
      if (bj.at(w) != prod) ibi = false;
    }
    rec.record("boolean-join-factorises", "phi~(a1...an) = phi~(a1)...phi~(an) on alternating words", ibi);

    Law fj = join_independent(x, y, ConvolutionKind::free);
    bool fn_body = true, fn_soul = true;
    for (const auto& [letters, powers] : detail::alternating_patterns(n)) {
      std::vector<std::vector<std::pair<Word, Rational>>> factors;
      for (std::size_t j = 0; j < letters.size(); ++j) {
        Word p = power_word(powers[j], letters[j]);
        factors.push_back({{p, Rational(1)}, {Word{}, -fj.at(p).body}});
      }
      GScalar v = detail::product_moment(fj, factors);
      if (!is_zero(v.body)) fn_body = false;
      const std::size_t len = letters.size();
      Rational expected = 0;
      bool palindrome = len % 2 == 1;
      for (std::size_t j = 0; palindrome && j < len / 2; ++j) palindrome = letters[j] == letters[len - 1 - j];
      if (palindrome) {
        expected = detail::product_moment(fj, {factors[len / 2]}).soul;
        for (std::size_t j = 0; j < len / 2; ++j)
          expected *= detail::product_moment(fj, {factors[j], factors[len - 1 - j]}).body;
      }
      if (v.soul != expected) fn_soul = false;
    }
    rec.record("free-join-centered", "phi(a1...an) = 0 for centered alternating a_j", fn_body);
    rec.record("free-join-infinitesimal", "phi'(a1...an) = phi(a1 an)...phi'(a_{(n+1)/2}) for palindromic patterns, else 0",
               fn_soul);
  }
  return rec.take();
}

inline std::vector<CheckResult> verify_series_identity(const VerifyOptions& opt) {
  detail::Recorder rec("series-identity");
  Rng rng(opt.seed);
  for (int i = 0; i < opt.samples; ++i) {
    for (int k = 1; k <= 2; ++k) {
      const int n = k == 1 ? opt.order : std::min(opt.order, 4);
      Law mu = random_law(k, n, rng);
      auto report = eta_series_check(mu, n);
      rec.record("product-form", "M' = (1 + M) B' (1 + M)", report.product_identity, report.first_mismatch);
      rec.record("corollary-form", "M' = M' B + (1 + M) B'", report.corollary_identity, report.first_mismatch);

      // interval triple sum: phi'(w) = sum over I(n) of d b_pi
      auto b = moments_to_cumulants(mu, CumulantFamily::boolean).values;
      auto bb = body_of(b), bs = soul_of(b);
      bool triple = true;
      for (const Word& w : mu.words()) {
        Rational sum = 0;
        for (const auto& pi : cached_partitions(static_cast<int>(w.size()), PartitionFamily::interval))
          sum += derivative_over_partition(bb, bs, pi, w);
        if (sum != mu.at(w).soul) triple = false;
      }
      rec.record("interval-expansion", "phi' = sum over interval partitions of d b_pi", triple);

      Law flat = mu.map([](const GScalar& v) { return GScalar(v.body); });
      auto flat_b = moments_to_cumulants(flat, CumulantFamily::boolean).values;
      bool zero_soul = eta_series_check(flat, n).ok();
      for (const Word& w : flat_b.words()) zero_soul = zero_soul && is_zero(flat_b.at(w).soul);
      rec.record("zero-soul", "phi' = 0 forces B' = 0 and both sides vanish", zero_soul);
    }
  }
  return rec.take();
}

inline std::vector<CheckResult> verify_lemma_adjoint(const VerifyOptions& opt) {
  detail::Recorder rec("lemma-adjoint");
  Rng rng(opt.seed);
  for (int i = 0; i < opt.samples; ++i) {
    const int k = detail::sample_vars(i);
    const int n = opt.order;
    Law law = random_law(k, n, rng);
    auto phi = law_character(law);
    auto r = moments_to_cumulants(law, CumulantFamily::free).values;
    auto b = moments_to_cumulants(law, CumulantFamily::boolean).values;
    Law alpha_t = random_law(k, n, rng);
    auto alpha = Functional<GScalar>::infinitesimal(alpha_t);

    auto theta = adjoint(phi, alpha);
    auto theta_inv = adjoint(character_inverse(phi), alpha);
    auto phi_inv = character_inverse(phi);
    bool comb = true, comb_inv = true, subset = true, subset_inv = true;
    for (const Word& w : law.words()) {
      if (theta(w) != detail::outer_block_sum(alpha_t, r, w, false)) comb = false;
      if (theta_inv(w) != detail::outer_block_sum(alpha_t, b, w, true)) comb_inv = false;
      // sum over S containing 1 and n of alpha(a_S) Phi(a_J)
      GScalar s1, s2;
      const std::uint32_t last = std::uint32_t{1} << (w.size() - 1);
      for (std::uint32_t mask = 0; mask < (last << 1); ++mask) {
        if (!(mask & 1u) || !(mask & last)) continue;
        Word as = w.restrict_mask(mask);
        std::vector<Word> runs;
        std::size_t j = 0;
        while (j < w.size()) {
          if (mask >> j & 1u) {
            ++j;
            continue;
          }
          std::size_t start = j;
          while (j < w.size() && !(mask >> j & 1u)) ++j;
          runs.push_back(w.slice(start, j));
        }
        s1 += alpha_t.at(as) * phi(Monomial(runs));
        s2 += alpha_t.at(as) * phi_inv(Monomial(runs));
      }
      if (theta(w) != s1) subset = false;
      if (theta_inv(w) != s2) subset_inv = false;
    }
    rec.record("outer-block-free", "theta_Phi(a)(w) = sum over NC_irr of a(a_V1) prod r(a_W)", comb);
    rec.record("outer-block-boolean", "theta_{Phi^-1}(a)(w) = sum over NC_irr of (-1)^{|pi|-1} a(a_V1) prod b(a_W)",
               comb_inv);
    rec.record("subset-form", "theta_Phi(a)(w) = sum over S containing 1, n of a(a_S) Phi(a_J)", subset);
    rec.record("subset-form-inverse", "theta_{Phi^-1}(a)(w) = sum over S containing 1, n of a(a_S) Phi^-1(a_J)",
               subset_inv);
    auto m = detail::word_mismatch(adjoint(phi, hs_log(phi, ProductKind::prec)), hs_log(phi, ProductKind::succ), n);
    rec.record("free-to-boolean", "theta_Phi(kappa) = beta", m.empty(), m);
    m = detail::word_mismatch(adjoint(character_inverse(phi), hs_log(phi, ProductKind::succ)),
                              hs_log(phi, ProductKind::prec), n);
    rec.record("boolean-to-free", "theta_{Phi^-1}(beta) = kappa", m.empty(), m);
  }
  return rec.take();
}

inline std::vector<CheckResult> verify_partitions(const VerifyOptions& opt) {
  detail::Recorder rec("partitions");
  const int n_max = std::clamp(opt.order + 1, 1, 8);
  auto catalan = [](int n) { return Rational(binomial(2 * n, n) / (n + 1)); };
  for (int n = 1; n <= n_max; ++n) {
    rec.record("catalan", "|NC(n)| = Catalan(n)",
               Rational(static_cast<long>(enumerate(n, PartitionFamily::noncrossing).size())) == catalan(n),
               "n=" + std::to_string(n));
    rec.record("interval-count", "|I(n)| = 2^{n-1}",
               enumerate(n, PartitionFamily::interval).size() == (std::size_t{1} << (n - 1)), "n=" + std::to_string(n));
  }
  const int n_small = std::clamp(opt.order, 1, 6);
  for (int n = 1; n <= n_small; ++n) {
    const auto& nc = cached_partitions(n, PartitionFamily::noncrossing);
    for (const auto& pi : nc) {
      auto st = nesting_stats(pi);
      rec.record("monotone-labelings", "m(pi) = |pi|!/tau(pi)! = number of monotone labelings",
                 st.monotone_count == monotone_labelings(pi).size() &&
                     Rational(static_cast<unsigned long>(st.monotone_count * st.tree_factorial)) ==
                         factorial(static_cast<unsigned>(pi.block_count())),
                 pi.to_string());
    }
    for (const auto& pi : nc)
      for (const auto& sigma : nc)
        if (compare(pi, sigma, PartitionOrder::minmax) && !compare(pi, sigma, PartitionOrder::refinement))
          rec.record("minmax-refines", "pi << sigma implies pi <= sigma", false, pi.to_string() + " " + sigma.to_string());
    rec.record("minmax-refines", "pi << sigma implies pi <= sigma", true);

    const Partition top = Partition::coarsest(n);
    for (const auto& sigma : cached_partitions(n, PartitionFamily::irreducible_nc)) {
      std::map<int, std::uint64_t> counts;
      long alternating = 0;
      for (const auto& pi : nc) {
        if (!compare(sigma, pi, PartitionOrder::minmax)) continue;
        ++counts[static_cast<int>(pi.block_count())];
        if (compare(pi, top, PartitionOrder::minmax)) alternating += pi.block_count() % 2 == 1 ? 1 : -1;
      }
      bool ok = true;
      for (int p = 1; p <= static_cast<int>(sigma.block_count()); ++p) ok = ok && counts[p] == count_above_irreducible(sigma, p);
      rec.record("count-above", "#{pi >> sigma, |pi| = p} = binomial(|sigma|-1, p-1)", ok, sigma.to_string());
      long binomial_sum = 0;
      for (int p = 1; p <= static_cast<int>(sigma.block_count()); ++p)
        binomial_sum += (p % 2 == 1 ? 1 : -1) * static_cast<long>(count_above_irreducible(sigma, p));
      rec.record("alternating-sum",
                 "sum over 1_n >> pi >> sigma of (-1)^{|pi|-1} = sum_p (-1)^{p-1} binom(|sigma|-1, p-1)",
                 alternating == binomial_sum && binomial_sum == (sigma.block_count() == 1 ? 1 : 0), sigma.to_string());
    }
  }
  const int n_mob = std::clamp(opt.order + 2, 1, 7);
  for (int n = 1; n <= n_mob; ++n) {
    long expected = (n % 2 == 1 ? 1 : -1) * catalan(n - 1).get_num().get_si();
    rec.record("mobius-bottom", "Mob(0_n, 1_n) = (-1)^{n-1} Catalan(n-1)",
               mobius_to_top(Partition::finest(n)) == expected, "n=" + std::to_string(n));
    if (n >= 2) {
      std::int64_t sum = 0;
      for (const auto& s : cached_partitions(n, PartitionFamily::noncrossing)) sum += mobius_to_top(s);
      rec.record("mobius-row-sum", "sum over NC(n) of Mob(sigma, 1_n) = 0", sum == 0, "n=" + std::to_string(n));
    }
  }
  return rec.take();
}

inline std::vector<CheckResult> verify_scalars(const VerifyOptions& opt) {
  detail::Recorder rec("scalars");
  Rng rng(opt.seed);
  for (int i = 0; i < 1000; ++i) {
    GScalar x = random_gscalar(rng), y = random_gscalar(rng), z = random_gscalar(rng);
    rec.record("commutative", "xy = yx", x * y == y * x);
    rec.record("associative", "(xy)z = x(yz)", (x * y) * z == x * (y * z));
    rec.record("distributive", "x(y+z) = xy + xz", x * (y + z) == x * y + x * z);
    rec.record("unit", "x1 = x", x * GScalar(Rational(1)) == x);
    rec.record("soul-derivation", "soul(xy) = body(x)soul(y) + soul(x)body(y)",
               (x * y).soul == x.body * y.soul + x.soul * y.body && (x * y).body == x.body * y.body);
    if (!is_zero(x.body) && !is_zero(y.body)) {
      rec.record("inverse", "x x^-1 = 1", x * g_inv(x) == GScalar(Rational(1)));
      rec.record("inverse-involution", "(x^-1)^-1 = x", g_inv(g_inv(x)) == x);
      rec.record("inverse-product", "(xy)^-1 = y^-1 x^-1", g_inv(x * y) == g_inv(y) * g_inv(x));
    }
  }
  rec.record("nilpotent", "hbar^2 = 0", is_zero(GScalar::hbar() * GScalar::hbar()));
  return rec.take();
}

/// Suite names in report order. The first six are the documented suites.
inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"shuffle-axioms", "roundtrips", "thm1-relations", "bp-semigroup",
                                              "series-identity", "lemma-adjoint", "magnus", "convolutions",
                                              "partitions", "scalars"};
  return names;
}

inline std::vector<CheckResult> run_suite(std::string_view name, const VerifyOptions& opt) {
  if (name == "shuffle-axioms") return verify_shuffle_axioms(opt);
  if (name == "roundtrips") return verify_roundtrips(opt);
  if (name == "thm1-relations") return verify_thm1_relations(opt);
  if (name == "bp-semigroup") return verify_bp_semigroup(opt);
  if (name == "series-identity") return verify_series_identity(opt);
  if (name == "lemma-adjoint") return verify_lemma_adjoint(opt);
  if (name == "magnus") return verify_magnus(opt);
  if (name == "convolutions") return verify_convolutions(opt);
  if (name == "partitions") return verify_partitions(opt);
  if (name == "scalars") return verify_scalars(opt);
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

/// "PASS suite.property [anchor]" lines, failures followed by their detail.
inline std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << '.' << r.property << " [" << r.anchor << "]";
    if (!r.passed && !r.detail.empty()) out << " at " << r.detail;
    out << '\n';
    if (r.passed) ++passed;
  }
  out << "SUMMARY " << passed << " passed, " << results.size() - passed << " failed\n";
  return out.str();
}

}  // namespace ncc
