#include <random>

#include <gtest/gtest.h>

#include "epoly/error.hpp"
#include "epoly/exchange.hpp"
#include "epoly/series.hpp"

using namespace epoly;

namespace {

HalfPoly random_poly(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<HalfPoly::Term> terms;
  for (int e = lo; e <= hi; ++e) terms.emplace_back(e, make_rational(coef(rng), 1 + (coef(rng) + 5) % 3));
  return HalfPoly::from_terms(terms);
}

// Horner evaluation on raw doubles-free integers: sum c_e q0^(e/2) for even e.
Rational naive_eval(const HalfPoly& p, long q0) {
  Rational acc = 0;
  for (const auto& [e, c] : p.terms()) acc += c * pow_rat(Rational(q0), e / 2);
  return acc;
}

}  // namespace

TEST(HalfPoly, Basics) {
  const HalfPoly p = HalfPoly::q() - HalfPoly(1);
  EXPECT_EQ((p * p).to_string(), "q^2 - 2*q + 1");
  EXPECT_EQ(HalfPoly::monomial(1, 3).to_string(), "q^(3/2)");
  EXPECT_EQ(HalfPoly::u() * HalfPoly::u(), HalfPoly::q());
  EXPECT_TRUE(HalfPoly().is_zero());
  EXPECT_EQ((p * p).eval(5), Rational(16));
  EXPECT_THROW(HalfPoly::u().eval(4), Error);
}

TEST(HalfPoly, AdamsSubstitutesPowers) {
  const HalfPoly p = HalfPoly::from_q_coeffs({1, 2, 3});
  EXPECT_EQ(p.adams(2), HalfPoly::from_q_coeffs({1, 0, 2, 0, 3}));
}

TEST(HalfPoly, RingAxiomsRandom) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const HalfPoly a = random_poly(rng, -3, 4), b = random_poly(rng, 0, 5), c = random_poly(rng, -2, 2);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, HalfPoly());
  }
}

TEST(HalfPoly, EvalMatchesNaive) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<HalfPoly::Term> terms;
    for (int e = -4; e <= 8; e += 2) terms.emplace_back(e, Rational(coef(rng)));
    const HalfPoly p = HalfPoly::from_terms(terms);
    for (long q0 : {2L, 3L, -7L}) EXPECT_EQ(p.eval(q0), naive_eval(p, q0));
  }
}

TEST(HalfPoly, DivisionByQMinusOne) {
  const HalfPoly qm1 = HalfPoly::q() - HalfPoly(1);
  const HalfPoly p = HalfPoly::from_q_coeffs({3, 0, 1});
  EXPECT_EQ((p * qm1.pow(3)).divide_by_q_minus_one(3), p);
  EXPECT_THROW(p.divide_by_q_minus_one(1), Error);
  EXPECT_EQ((p * qm1).divide_exact(qm1), p);
}

TEST(RationalFunction, NormalFormAndCancellation) {
  const HalfPoly qm1 = HalfPoly::q() - HalfPoly(1);
  const HalfPoly qp1 = HalfPoly::q() + HalfPoly(1);
  const RationalFunction f(qm1 * qp1, qm1);
  EXPECT_TRUE(f.is_laurent());
  EXPECT_EQ(f.to_half_poly(), qp1);
  const RationalFunction g(HalfPoly(1), qp1);
  EXPECT_FALSE(g.is_laurent());
  EXPECT_THROW(g.to_half_poly(), Error);
  EXPECT_TRUE((g * RationalFunction(qp1)).is_one());
  EXPECT_EQ(g.eval(3), make_rational(1, 4));
  EXPECT_THROW(RationalFunction(1) / RationalFunction(), Error);
}

TEST(RationalFunction, FieldAxiomsRandom) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalFunction a(random_poly(rng, 0, 3), random_poly(rng, 0, 2) + HalfPoly::q_power(3));
    const RationalFunction b(random_poly(rng, -1, 2), HalfPoly::q() + HalfPoly(2));
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_TRUE(cross_equal((a + b) * (a - b), a * a - b * b));
    EXPECT_TRUE((a / a).is_one());
    EXPECT_TRUE(cross_equal(a.inverse().inverse(), a));
  }
}

TEST(Series, LogExpInverse) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-6, 6);
  RationalSeries f = RationalSeries::one(8);
  for (int k = 1; k <= 8; ++k) f[k] = make_rational(coef(rng), 1 + k % 3);
  EXPECT_EQ(formal_exp(formal_log(f)), f);
  EXPECT_EQ(pleth_exp(pleth_log(f)), f);
  EXPECT_EQ(series_inverse(f) * f, RationalSeries::one(8));
}

TEST(Series, PlethExpOfMonomial) {
  // Exp(T) = 1/(1 - T).
  const RationalSeries e = pleth_exp(RationalSeries::monomial(Rational(1), 1, 6));
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(e[k], Rational(1));
}

TEST(Series, PlethLogOfGeometricInQ) {
  // Log(1/(1 - qT)) = qT.
  TruncatedSeries s(5);
  for (int k = 0; k <= 5; ++k) s[k] = RationalFunction(HalfPoly::q_power(k));
  const TruncatedSeries l = pleth_log(s);
  EXPECT_TRUE(cross_equal(l[1], RationalFunction(HalfPoly::q())));
  for (int k = 2; k <= 5; ++k) EXPECT_TRUE(l[k].is_zero());
}

TEST(Series, RationalPower) {
  RationalSeries f = RationalSeries::one(6);
  f[1] = 2;
  f[2] = 1;  // (1 + T)^2
  const RationalSeries h = rational_exponent_pow(f, make_rational(1, 2));
  EXPECT_EQ(h[0], Rational(1));
  EXPECT_EQ(h[1], Rational(1));
  for (int k = 2; k <= 6; ++k) EXPECT_EQ(h[k], Rational(0));
}

TEST(Series, Errors) {
  RationalSeries bad(4);
  bad[0] = 2;
  EXPECT_THROW(pleth_log(bad), Error);
  EXPECT_THROW(pleth_exp(RationalSeries::one(4)), Error);
}

TEST(Exchange, RoundTrip) {
  const HalfPoly p = HalfPoly::from_q_coeffs({1, -2, 1});
  EXPECT_EQ(to_exchange(p), "[[0,1,1],[2,-2,1],[4,1,1]]");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    HalfPoly r = random_poly(rng, -3, 6);
    r *= Rational(pow_int(Integer(10), 25));
    EXPECT_EQ(half_poly_from_exchange(to_exchange(r)), r);
    const RationalFunction f(r, HalfPoly::q() + HalfPoly(3));
    EXPECT_TRUE(cross_equal(rational_function_from_exchange(to_exchange(f)), f));
  }
  EXPECT_THROW(half_poly_from_exchange("[[0,1]"), Error);
}
