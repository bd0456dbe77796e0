#include <algorithm>
#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "epoly/error.hpp"
#include "epoly/partition.hpp"

using namespace epoly;

namespace {

// Weakly decreasing sequences by plain recursion.
std::set<std::vector<int>> brute_partitions(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.insert(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

HalfPoly gl_product(int n) {
  HalfPoly out(1);
  for (int i = 0; i < n; ++i) out *= HalfPoly::q_power(n) - HalfPoly::q_power(i);
  return out;
}

}  // namespace

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({1, 2}), Error);
  EXPECT_THROW(Partition({2, 0}), Error);
  EXPECT_NO_THROW(Partition({3, 3, 1}));
}

TEST(Partition, Parse) {
  EXPECT_EQ(Partition::parse("3+2+1"), Partition({3, 2, 1}));
  EXPECT_EQ(Partition::parse("[3,2,1]"), Partition({3, 2, 1}));
  EXPECT_TRUE(Partition::parse("[]").empty());
  EXPECT_TRUE(Partition::parse("0").empty());
  EXPECT_THROW(Partition::parse("3+x"), Error);
}

TEST(Partition, Statistics) {
  const Partition l{3, 2, 2, 1};
  EXPECT_EQ(l.weight(), 8);
  EXPECT_EQ(l.conjugate(), Partition({4, 3, 1}));
  EXPECT_EQ(l.n_lambda(), 0 * 3 + 1 * 2 + 2 * 2 + 3 * 1);
  EXPECT_EQ(l.ell_odd(), 2);
  EXPECT_EQ(l.ell_even(), 2);
  EXPECT_EQ(l.z(), Integer(3 * 2 * 2 * 2 * 1));
  const auto m = l.multiplicities();
  EXPECT_EQ(m[1], 1);
  EXPECT_EQ(m[2], 2);
  EXPECT_EQ(m[3], 1);
  EXPECT_EQ(Partition({4, 2}).stretch(2), Partition({8, 4}));
  EXPECT_EQ(Partition({4, 2}).repeat(2), Partition({4, 4, 2, 2}));
  EXPECT_EQ(Partition({3, 1}).union_with(Partition({2, 1})), Partition({3, 2, 1, 1}));
}

TEST(Partition, HooksOfStaircase) {
  std::vector<int> h = Partition({2, 1}).hooks();
  std::sort(h.begin(), h.end());
  EXPECT_EQ(h, (std::vector<int>{1, 1, 3}));
}

TEST(Partition, EnumerationMatchesBruteForce) {
  for (int n = 0; n <= 12; ++n) {
    const auto all = all_partitions(n);
    std::set<std::vector<int>> seen;
    for (const auto& l : all) seen.insert(l.parts());
    EXPECT_EQ(seen, brute_partitions(n)) << n;
    EXPECT_EQ(seen.size(), all.size());
    EXPECT_EQ(partition_count(n), Integer(static_cast<long>(all.size())));
    EXPECT_TRUE(std::is_sorted(all.rbegin(), all.rend()));
  }
  EXPECT_EQ(partition_count(100), Integer("190569292"));
}

TEST(Partition, ConjugationIsInvolution) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& l : all_partitions(n)) {
      EXPECT_EQ(l.conjugate().conjugate(), l);
      EXPECT_EQ(l.conjugate().weight(), n);
    }
}

TEST(Partition, ClassSumOfSymmetricGroup) {
  // sum over cycle types of 1/z = 1.
  for (int n = 1; n <= 9; ++n) {
    Rational acc = 0;
    for (const auto& l : all_partitions(n)) acc += Rational(1) / Rational(l.z());
    EXPECT_EQ(acc, Rational(1));
  }
}

TEST(Partition, CentralizerOrders) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(gl_order_poly(n), gl_product(n));
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    EXPECT_EQ(centralizer_order_poly(Partition(ones)), gl_product(n));
    EXPECT_EQ(centralizer_order_poly(Partition({n})), HalfPoly::q_power(n) - HalfPoly::q_power(n - 1));
  }
}

TEST(Partition, UnipotentClassEquation) {
  // The number of unipotent elements of GL_n(F_q) is q^(n^2 - n).
  for (int n = 1; n <= 5; ++n)
    for (long q : {3L, 5L}) {
      Rational acc = 0;
      for (const auto& l : all_partitions(n)) acc += gl_order_poly(n).eval(q) / centralizer_order_poly(l).eval(q);
      EXPECT_EQ(acc, Rational(pow_int(Integer(q), static_cast<unsigned long>(n * n - n))));
    }
}

TEST(PartitionMultisets, WeightsAndCounts) {
  // Multisets of nonempty partitions of total weight w are counted by Exp(sum p(n) T^n).
  const std::vector<long> expected{1, 1, 3, 6, 14, 27, 58};
  for (int w = 1; w <= 6; ++w) {
    const auto all = partition_multisets(w);
    EXPECT_EQ(static_cast<long>(all.size()), expected[static_cast<std::size_t>(w)]) << w;
    for (const auto& ms : all) {
      int total = 0;
      for (const auto& [l, k] : ms) {
        EXPECT_FALSE(l.empty());
        EXPECT_GT(k, 0);
        total += l.weight() * k;
      }
      EXPECT_EQ(total, w);
    }
  }
}
