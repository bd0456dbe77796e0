#include <functional>

#include <gtest/gtest.h>

#include "epoly/error.hpp"
#include "epoly/symfun.hpp"

using namespace epoly;

namespace {

Integer hook_dimension(const Partition& l) {
  Integer prod = 1;
  for (int h : l.hooks()) prod *= h;
  return factorial(static_cast<unsigned long>(l.weight())) / prod;
}

// Weighted count of mu inside lam with lam/mu a horizontal strip, weight sign^|lam/mu|.
long interlacing_count(const Partition& lam, int sign) {
  const int len = lam.length();
  long total = 0;
  std::vector<int> mu(static_cast<std::size_t>(len), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == len) {
      int removed = 0;
      for (int j = 0; j < len; ++j) removed += lam[static_cast<std::size_t>(j)] - mu[static_cast<std::size_t>(j)];
      total += (sign < 0 && removed % 2 != 0) ? -1 : 1;
      return;
    }
    for (int v = lam[static_cast<std::size_t>(i) + 1]; v <= lam[static_cast<std::size_t>(i)]; ++v) {
      mu[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

// C_{m^n} and D_{m^n} from the i + j + 2k = n (+ l for even m) decomposition.
Rational block_c(int m, int n, bool d_version) {
  Rational acc = 0;
  for (int k = 0; 2 * k <= n; ++k)
    for (int i = 0; i + 2 * k <= n; ++i) {
      const int rest = n - i - 2 * k;
      if (m % 2 != 0) {
        const int j = rest;
        Rational term = Rational(1) / Rational(factorial(i) * factorial(j) * factorial(k) * pow_int(2, k) *
                                               pow_int(m, static_cast<unsigned long>(i + j + k)));
        if (d_version && j % 2 != 0) term = -term;
        acc += term;
      } else {
        for (int j = 0; j <= rest; ++j) {
          const int l = rest - j;
          Rational term = Rational(1) / Rational(factorial(i) * factorial(j) * factorial(l) * factorial(k) *
                                                 pow_int(2, k) * pow_int(m, static_cast<unsigned long>(i + j + l + k)));
          if (l % 2 != 0) term = -term;
          acc += term;
        }
      }
    }
  return acc;
}

SymFunc degree_part(const SymFunc& f, int lo, int hi) {
  SymFunc out;
  out.basis = f.basis;
  out.degree_bound = f.degree_bound;
  for (const auto& [l, c] : f.terms)
    if (l.weight() >= lo && l.weight() <= hi) out.add(l, c);
  return out;
}

}  // namespace

TEST(Characters, SmallTable) {
  const Partition s3{3}, s21{2, 1}, s111{1, 1, 1};
  EXPECT_EQ(sn_character(s21, s111), 2);
  EXPECT_EQ(sn_character(s21, Partition({2, 1})), 0);
  EXPECT_EQ(sn_character(s21, s3), -1);
  EXPECT_EQ(sn_character(s111, Partition({2, 1})), -1);
  EXPECT_THROW(sn_character(s21, Partition({2})), Error);
}

TEST(Characters, DimensionAndSign) {
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    for (const auto& l : all_partitions(n)) {
      EXPECT_EQ(Integer(sn_character(l, Partition(ones))), hook_dimension(l));
      for (const auto& pi : all_partitions(n)) {
        EXPECT_EQ(sn_character(Partition({n}), pi), 1);
        EXPECT_EQ(sn_character(Partition(ones), pi), pi.sign());
        EXPECT_EQ(sn_character(l.conjugate(), pi), pi.sign() * sn_character(l, pi));
      }
    }
  }
}

TEST(Characters, Orthogonality) {
  for (int n = 1; n <= 7; ++n) {
    const auto all = all_partitions(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        Rational acc = 0;
        for (const auto& pi : all) acc += Rational(sn_character(a, pi) * sn_character(b, pi)) / Rational(pi.z());
        EXPECT_EQ(acc, Rational(a == b ? 1 : 0));
      }
  }
}

TEST(BasisChange, RoundTrip) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& pi : all_partitions(n)) {
      const SymFunc p = SymFunc::single(Basis::powersum, pi);
      EXPECT_EQ(schur_to_power(power_to_schur(p)), p);
    }
  std::vector<int> ones(4, 1);
  const SymFunc s = power_to_schur(SymFunc::single(Basis::powersum, Partition(ones)));
  for (const auto& l : all_partitions(4)) EXPECT_EQ(s.coeff(l), Rational(hook_dimension(l)));
}

TEST(Pieri, SmallProducts) {
  const SymFunc s1 = SymFunc::single(Basis::schur, Partition({1}));
  const SymFunc row = pieri_row(s1, 1);
  EXPECT_EQ(row.coeff(Partition({2})), Rational(1));
  EXPECT_EQ(row.coeff(Partition({1, 1})), Rational(1));
  const SymFunc col = pieri_col(SymFunc::single(Basis::schur, Partition({2, 1})), 2);
  EXPECT_EQ(col.coeff(Partition({3, 2})), Rational(1));
  EXPECT_EQ(col.coeff(Partition({3, 1, 1})), Rational(1));
  EXPECT_EQ(col.coeff(Partition({2, 2, 1})), Rational(1));
  EXPECT_EQ(col.coeff(Partition({2, 1, 1, 1})), Rational(1));
  EXPECT_EQ(col.terms.size(), 4u);
}

TEST(SchurIdentities, EvenRowsTimesElementary) {
  const int N = 8;
  const SymFunc even_rows = schur_sum(N, [](const Partition& l) { return l.all_parts_even(); });
  const SymFunc lhs = degree_part(pieri_series(even_rows, [](int) { return Rational(1); }, false), 0, N);
  EXPECT_EQ(lhs, schur_sum(N, [](const Partition&) { return true; }));
}

TEST(SchurIdentities, EvenColumnsTimesComplete) {
  const int N = 8;
  const SymFunc even_cols = schur_sum(N, [](const Partition& l) { return l.conjugate().all_parts_even(); });
  const SymFunc lhs = degree_part(pieri_series(even_cols, [](int) { return Rational(1); }, true), 0, N);
  EXPECT_EQ(lhs, schur_sum(N, [](const Partition&) { return true; }));
  // Mixing even columns with the elementary series does not give the full sum.
  const SymFunc mixed = degree_part(pieri_series(even_cols, [](int) { return Rational(1); }, false), 0, N);
  EXPECT_NE(mixed, schur_sum(N, [](const Partition&) { return true; }));
}

TEST(Coefficients, ClosedFormsAgreeWithInterlacingCounts) {
  for (int w = 1; w <= 8; ++w)
    for (const auto& l : all_partitions(w)) {
      EXPECT_EQ(a_plus(l), Integer(interlacing_count(l.conjugate(), 1))) << l.to_string();
      EXPECT_EQ(a_minus(l), Integer(interlacing_count(l.conjugate(), -1))) << l.to_string();
    }
}

TEST(Coefficients, ThreeRoutesAgree) {
  for (int w = 1; w <= 8; ++w)
    for (const auto& l : all_partitions(w)) {
      EXPECT_EQ(Rational(a_plus(l)), a_plus_by_characters(l)) << l.to_string();
      EXPECT_EQ(Rational(a_plus(l)), a_plus_by_pieri(l)) << l.to_string();
      EXPECT_EQ(Rational(a_minus(l)), a_minus_by_characters(l)) << l.to_string();
      EXPECT_EQ(Rational(a_minus(l)), a_minus_by_pieri(l)) << l.to_string();
    }
}

TEST(Coefficients, SmallValues) {
  EXPECT_EQ(a_plus(Partition({1})), Integer(2));
  EXPECT_EQ(a_minus(Partition({1})), Integer(0));
  EXPECT_EQ(a_plus(Partition({1, 1})), Integer(3));
  EXPECT_EQ(a_minus(Partition({1, 1})), Integer(1));
  EXPECT_EQ(a_plus(Partition({2, 1})), Integer(4));
}

TEST(CD, BlocksMatchExplicitSums) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; m * n <= 8; ++n) {
      std::vector<int> parts(static_cast<std::size_t>(n), m);
      const Partition pi(parts);
      EXPECT_EQ(c_pi(pi), block_c(m, n, false)) << pi.to_string();
      EXPECT_EQ(d_pi(pi), block_c(m, n, true)) << pi.to_string();
    }
}

TEST(CD, EnumerationMatchesGeneratingProducts) {
  const CDTable table = c_d_via_genfun(8);
  for (int n = 0; n <= 8; ++n)
    for (const auto& pi : all_partitions(n)) {
      EXPECT_EQ(table.c.at(pi), c_pi(pi)) << pi.to_string();
      EXPECT_EQ(table.d.at(pi), d_pi(pi)) << pi.to_string();
      EXPECT_GE(c_pi(pi), 0);
      EXPECT_GE(d_pi(pi), 0);
    }
}
