#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "epoly/half_poly.hpp"
#include "epoly/rational.hpp"

namespace epoly {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidPartition unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// (1^{m[1]} 2^{m[2]} ...); m[0] is ignored.
  static Partition from_multiplicities(const std::vector<int>& m);
  /// Accepts "3+2+1", "[3,2,1]", "[]" and "0" (the empty partition).
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;
  /// m[d] = number of parts equal to d, for d = 0..largest().
  std::vector<int> multiplicities() const;
  /// sum (i-1) lambda_i.
  long n_lambda() const;
  /// Hook lengths, row by row.
  std::vector<int> hooks() const;
  int ell_odd() const;
  int ell_even() const;
  /// Sign of a permutation of this cycle type.
  int sign() const { return ell_even() % 2 == 0 ? 1 : -1; }
  /// Centralizer order of this cycle type in S_|lambda|.
  Integer z() const;
  bool all_parts_even() const;

  Partition union_with(const Partition& other) const;
  /// s . lambda: every part times s.
  Partition stretch(int s) const;
  /// s lambda: every multiplicity times s.
  Partition repeat(int s) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic order on the parts sequence.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

/// All partitions of n in descending lexicographic order.
std::vector<Partition> all_partitions(int n);

/// Number of partitions of n via Euler's pentagonal recurrence.
Integer partition_count(int n);

/// a_lambda(q) = q^{|lambda| + 2 n_lambda} prod_d phi_{m_d}(1/q).
HalfPoly centralizer_order_poly(const Partition& lambda);

/// |GL_n(F_q)| as a polynomial in q.
HalfPoly gl_order_poly(int n);

/// A finite multiset of nonempty partitions, stored as (partition, multiplicity)
/// pairs sorted by weight then descending lex order.
using PartitionMultiset = std::vector<std::pair<Partition, int>>;

/// Every multiset of nonempty partitions with total weight w, in a fixed order.
std::vector<PartitionMultiset> partition_multisets(int w);

}  // namespace epoly
