#include <gtest/gtest.h>

#include "epoly/error.hpp"
#include "epoly/fforacle/oracle.hpp"

using namespace epoly;
using namespace epoly::ff;

namespace {

Matrix mat2(int a, int b, int c, int d) {
  Matrix m;
  m.n = 2;
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

}  // namespace

TEST(PrimeField, Arithmetic) {
  const PrimeField F(7);
  EXPECT_EQ(F.mul(3, 5), 1);
  EXPECT_EQ(F.inv(3), 5);
  EXPECT_EQ(F.pow(3, 6), 1);
  EXPECT_EQ(F.reduce(-1), 6);
  EXPECT_EQ(F.elements_of_order(2), std::vector<int>{6});
  EXPECT_THROW(PrimeField(9), Error);
  EXPECT_THROW(PrimeField(2), Error);
}

TEST(Polynomials, IrreducibleCounts) {
  // Monic irreducibles other than t: q - 1 linear, (q^2 - q)/2 quadratic, (q^3 - q)/3 cubic.
  for (int q : {3, 5, 7}) {
    const auto irr = irreducibles(PrimeField(q), 3);
    int by_degree[4] = {0, 0, 0, 0};
    for (const auto& f : irr) ++by_degree[degree(f)];
    EXPECT_EQ(by_degree[1], q - 1);
    EXPECT_EQ(by_degree[2], (q * q - q) / 2);
    EXPECT_EQ(by_degree[3], (q * q * q - q) / 3);
  }
}

TEST(Matrices, InverseAndCharPoly) {
  const PrimeField F(5);
  const Matrix a = mat2(1, 2, 3, 4);
  EXPECT_EQ(mat_mul(F, a, inverse(F, a)), identity(2));
  EXPECT_EQ(char_poly(F, a), (Poly{F.reduce(-2), F.reduce(-5), 1}));
  EXPECT_EQ(poly_eval(F, char_poly(F, a), a), (Matrix{2, {}}));
  EXPECT_EQ(decode(F, 2, encode(F, a)), a);
}

TEST(ClassTable, Counts) {
  EXPECT_EQ(ClassTable(1, PrimeField(3)).size(), 2u);
  EXPECT_EQ(ClassTable(2, PrimeField(3)).size(), 8u);
  EXPECT_EQ(ClassTable(2, PrimeField(13)).size(), 168u);
  const ClassTable t(2, PrimeField(5));
  Integer total = 0;
  for (std::size_t c = 0; c < t.size(); ++c) total += t.class_size(c);
  EXPECT_EQ(total, Integer(480));
  EXPECT_THROW(ClassTable(4, PrimeField(3)), Error);
}

TEST(ClassTable, ClassEquationAndRoundTrip) {
  for (int n = 1; n <= 3; ++n)
    for (int q : {3, 5, 7}) {
      const ClassTable t(n, PrimeField(q));
      Integer total = 0;
      for (std::size_t c = 0; c < t.size(); ++c) {
        total += t.class_size(c);
        EXPECT_EQ(t.class_of(t.representative(c)), c);
      }
      EXPECT_EQ(total, gl_order(n, q));
    }
}

TEST(ClassTable, SweepMatchesClassSizes) {
  const ClassTable t(3, PrimeField(3));
  std::vector<Integer> seen(t.size(), 0);
  for (std::uint32_t code : t.elements()) seen[static_cast<std::size_t>(t.class_of_code(code))] += 1;
  for (std::size_t c = 0; c < t.size(); ++c) EXPECT_EQ(seen[c], t.class_size(c)) << t.label_string(c);
}

TEST(Classify, Examples) {
  const PrimeField F(5);
  const ClassTable t(2, F);
  const auto& irr = t.irreducibles();
  const ClassLabel id = t.classify(identity(2));
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(irr[static_cast<std::size_t>(id[0].first)], (Poly{4, 1}));
  EXPECT_EQ(id[0].second, Partition({1, 1}));
  const ClassLabel unip = t.classify(mat2(1, 1, 0, 1));
  EXPECT_EQ(unip[0].second, Partition({2}));
  const Poly f{2, 0, 1};  // t^2 + 2 is irreducible over F_5
  const ClassLabel cyc = t.classify(companion(F, f));
  ASSERT_EQ(cyc.size(), 1u);
  EXPECT_EQ(irr[static_cast<std::size_t>(cyc[0].first)], f);
  EXPECT_EQ(cyc[0].second, Partition({1}));
  EXPECT_THROW(t.classify(mat2(1, 2, 2, 4)), Error);
}

TEST(ClassFunctions, FValues) {
  const ClassTable t(2, PrimeField(3));
  const ClassFunction f = F_brute(t);
  EXPECT_EQ(f[t.class_of(identity(2))], Integer(18));
  for (std::size_t c = 0; c < t.size(); ++c)
    if (!t.is_symmetric(c)) EXPECT_EQ(f[c], 0) << t.label_string(c);
}

TEST(ClassFunctions, ClosedFormMatchesBruteForce) {
  for (int n = 1; n <= 3; ++n)
    for (int q : {3, 5}) {
      const ClassTable t(n, PrimeField(q));
      const ClassFunction brute = F_brute(t);
      EXPECT_EQ(F_closed(t), brute);
      Integer mass = 0;
      for (std::size_t c = 0; c < t.size(); ++c) mass += brute[c] * t.class_size(c);
      EXPECT_EQ(mass, 2 * t.group_order());
    }
}

TEST(ClassFunctions, DegreePrediction) {
  for (int n = 1; n <= 3; ++n)
    for (int q : {3, 5}) {
      const ClassTable t(n, PrimeField(q));
      for (std::size_t c = 0; c < t.size(); ++c) {
        const HalfPoly p = F_closed_poly(t, c);
        if (p.is_zero()) continue;
        EXPECT_EQ(p.leading(), Rational(1)) << t.label_string(c);
        EXPECT_EQ(make_rational(p.high(), 2), F_degree_predicted(t, c)) << t.label_string(c);
      }
    }
}

TEST(ClassFunctions, NValues) {
  const ClassTable t(2, PrimeField(3));
  const ClassFunction nf = N(t);
  EXPECT_EQ(nf[t.class_of(identity(2))], Integer(18));
  Integer total = 0;
  for (std::size_t c = 0; c < t.size(); ++c) total += nf[c] * t.class_size(c);
  EXPECT_EQ(total, t.group_order());

  const ClassTable t1(1, PrimeField(7));
  const ClassFunction n1 = N(t1);
  for (std::size_t c = 0; c < t1.size(); ++c)
    EXPECT_EQ(n1[c], t1.representative(c) == identity(1) ? Integer(6) : Integer(0));
}

TEST(Convolution, UnitCommutativityAndCommutators) {
  const ClassTable t(2, PrimeField(3));
  const Kernel k(t);
  const ClassFunction f = F_brute(t), nf = N(t);
  const ClassFunction unit = delta(t, t.class_of(identity(2)));
  EXPECT_EQ(convolve(k, unit, nf), nf);
  EXPECT_EQ(convolve(k, f, unit), f);
  EXPECT_EQ(convolve(k, f, nf), convolve(k, nf, f));
  EXPECT_EQ(convolve(k, nf, nf), C_brute(t));
  EXPECT_THROW(convolve(k, ClassFunction(3, 0), nf), Error);
}

TEST(Oracle, RankOneDirect) {
  const PrimeField F(5);
  EXPECT_EQ(count_representation_variety(1, F, SurfaceData(2, 1), 4), Integer(64));
}

TEST(Oracle, RankTwoAndRootIndependence) {
  const Oracle o(2, 5);
  const SurfaceData s(2, 1);
  EXPECT_EQ(o.count(s, 2), Integer(952320));
  EXPECT_EQ(o.count(s, 3), Integer(952320));
  EXPECT_EQ(primitive_roots_2n(2, o.table().field()), (std::vector<int>{2, 3}));
}

TEST(Oracle, ComponentsSumToTotal) {
  const Oracle o(2, 5);
  const SurfaceData s(2, 2);
  const Integer a = o.count_signs(s, 2, {1, -1});
  const Integer b = o.count_signs(s, 2, {-1, 1});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a + b, o.count(s, 2));
  EXPECT_EQ(a, o.count_component(s, 2, 1));
  EXPECT_THROW(o.count_signs(s, 2, {1, 1}), Error);
}

TEST(Oracle, Adjudication) {
  const Oracle o(2, 5);
  EXPECT_TRUE(compare_with_formula(o, SurfaceData(2, 1)).equal);
  EXPECT_TRUE(compare_with_formula(o, SurfaceData(2, 2)).equal);
  EXPECT_FALSE(compare_with_formula(o, SurfaceData(2, 2), std::nullopt, PairingConvention::transposed).equal);
  const OracleReport rep = compare_with_formula(o, SurfaceData(2, 3), 3);
  EXPECT_TRUE(rep.equal);
  EXPECT_EQ(rep.to_json_line().rfind("{\"n\":2,\"q\":5,\"g\":2,\"r\":3,\"k\":3,", 0), 0u);
}

TEST(Oracle, Errors) {
  EXPECT_THROW(primitive_roots_2n(2, PrimeField(7)), Error);
  EXPECT_THROW(Oracle(3, 11), Error);
  const Oracle o(1, 3);
  EXPECT_THROW(o.count_component(SurfaceData(2, 2), 2, 2), Error);
}

TEST(Oracle, ThreadCountDoesNotChangeResults) {
  const ClassTable t(2, PrimeField(5));
  const Kernel serial(t);
  setenv("EPOLY_ORACLE_THREADS", "3", 1);
  const Kernel parallel(t);
  unsetenv("EPOLY_ORACLE_THREADS");
  const ClassFunction nf = N(t);
  EXPECT_EQ(convolve(serial, nf, nf), convolve(parallel, nf, nf));
}
