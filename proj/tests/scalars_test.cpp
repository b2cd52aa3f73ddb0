#include <gtest/gtest.h>

#include "ncc/grassmann.hpp"
#include "ncc/polynomial.hpp"
#include "ncc/random.hpp"

using namespace ncc;

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), frac(1, 2));
  EXPECT_EQ(parse_rational(" -4/2 "), Rational(-2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
  EXPECT_EQ(to_string(frac(6, -4)), "-3/2");
  EXPECT_EQ(to_string(frac(4, 2)), "2");
  EXPECT_EQ(parse_rational("123456789012345678901234567890/3"), Rational(mpz_class("41152263004115226300411522630")));
  for (const char* bad : {"", "1/0", "1.5", "1/", "/2", "1/-2", "a", "1 2", "--1", "2/3/4"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  EXPECT_THROW(frac(1, 0), DomainError);
}

TEST(Grassmann, WorkedExamples) {
  GScalar a(1, 2), b(3, 4);
  EXPECT_EQ(g_mul(a, b), GScalar(3, 10));
  EXPECT_EQ(g_mul(GScalar::hbar(), GScalar::hbar()), GScalar());
  EXPECT_EQ(g_inv(GScalar(2, 3)), GScalar(frac(1, 2), frac(-3, 4)));
  EXPECT_EQ(g_inv(GScalar(1)), GScalar(1));
  EXPECT_THROW(g_inv(GScalar(0, 1)), NonInvertibleError);
}

TEST(Grassmann, Companions) {
  GScalar x(frac(2, 3), frac(-1, 5)), y(-1, 4);
  EXPECT_EQ(g_add(x, y), GScalar(frac(-1, 3), frac(19, 5)));
  EXPECT_EQ(g_neg(x), GScalar(frac(-2, 3), frac(1, 5)));
  EXPECT_EQ(g_scale(x, Rational(3)), GScalar(2, frac(-3, 5)));
  // (a + hb)^n = a^n + h n a^{n-1} b
  EXPECT_EQ(g_pow(x, 3), GScalar(frac(8, 27), 3 * frac(4, 9) * frac(-1, 5)));
  EXPECT_EQ(g_pow(x, 0), GScalar(1));
  EXPECT_EQ(g_pow(x, -2), g_mul(g_inv(x), g_inv(x)));
}

TEST(Grassmann, TextForm) {
  EXPECT_EQ(to_string(GScalar(frac(1, 2), frac(-3, 4))), "1/2 + h*-3/4");
  EXPECT_EQ(to_string(GScalar(5)), "5");
  EXPECT_EQ(parse_gscalar("1/2 + h*3/4"), GScalar(frac(1, 2), frac(3, 4)));
  EXPECT_EQ(parse_gscalar("1/2 - h*3/4"), GScalar(frac(1, 2), frac(-3, 4)));
  EXPECT_EQ(parse_gscalar("1/2+h*-3/4"), GScalar(frac(1, 2), frac(-3, 4)));
  EXPECT_EQ(parse_gscalar("-7"), GScalar(-7));
  for (const char* bad : {"h*1", "1 + h", "1 + h 2", "1 * h*2", "x"}) EXPECT_THROW(parse_gscalar(bad), ParseError) << bad;
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    GScalar x = random_gscalar(rng);
    EXPECT_EQ(parse_gscalar(to_string(x)), x);
  }
}

TEST(Grassmann, RingAxiomsOnRandomSamples) {
  Rng rng(11);
  const GScalar one(1);
  for (int i = 0; i < 1000; ++i) {
    GScalar x = random_gscalar(rng), y = random_gscalar(rng), z = random_gscalar(rng);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ(x * one, x);
    ASSERT_EQ(x + g_neg(x), GScalar());
    // body is a ring homomorphism, soul a derivation over it
    ASSERT_EQ((x * y).body, x.body * y.body);
    ASSERT_EQ((x * y).soul, x.body * y.soul + x.soul * y.body);
    if (!is_zero(x.body) && !is_zero(y.body)) {
      ASSERT_EQ(x * g_inv(x), one);
      ASSERT_EQ(g_inv(g_inv(x)), x);
      ASSERT_EQ(g_inv(x * y), g_inv(y) * g_inv(x));
    }
  }
}

TEST(Polynomial, Arithmetic) {
  auto x = Polynomial::variable(0), y = Polynomial::variable(1);
  auto p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_EQ(p.coefficient({2}), Rational(1));
  EXPECT_EQ(p.coefficient({0, 2}), Rational(-1));
  EXPECT_EQ(p.coefficient({1, 1}), Rational(0));
  EXPECT_TRUE(is_zero(p - p));
  EXPECT_EQ((Polynomial(frac(1, 2)) * x * x * y).to_string({"a", "b"}), "1/2*a^2*b");
  EXPECT_EQ(Polynomial::monomial({{0, 1}, {0, 2}}, 3), Polynomial(3) * x * x * x);
}

TEST(Polynomial, GrassmannOverPolynomials) {
  using G = Grassmann<Polynomial>;
  G a(Polynomial::variable(0), Polynomial::variable(1));
  G b(Polynomial::variable(2), Polynomial::variable(3));
  G ab = a * b;
  EXPECT_EQ(ab.body, Polynomial::monomial({{0, 1}, {2, 1}}));
  EXPECT_EQ(ab.soul, Polynomial::monomial({{0, 1}, {3, 1}}) + Polynomial::monomial({{1, 1}, {2, 1}}));
}
