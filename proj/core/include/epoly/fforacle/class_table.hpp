#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "epoly/fforacle/field.hpp"
#include "epoly/partition.hpp"
#include "epoly/rational.hpp"

namespace epoly::ff {

/// Conjugacy class label: irreducible polynomial (index into ClassTable::irreducibles)
/// mapped to the partition of its elementary-divisor exponents. Sorted by index.
using ClassLabel = std::vector<std::pair<int, Partition>>;

/// Largest group order the sweeping routines accept.
inline constexpr long kMaxGroupOrder = 200000;

class ClassTable {
 public:
  ClassTable(int n, const PrimeField& field);

  int n() const { return n_; }
  const PrimeField& field() const { return field_; }
  const std::vector<Poly>& irreducibles() const { return irreducibles_; }
  /// Index of f* in irreducibles().
  int dual_index(int i) const { return dual_[i]; }

  std::size_t size() const { return labels_.size(); }
  const ClassLabel& label(std::size_t c) const { return labels_[c]; }
  const Matrix& representative(std::size_t c) const { return reps_[c]; }
  const Integer& class_size(std::size_t c) const { return sizes_[c]; }
  const Integer& group_order() const { return group_order_; }
  /// Determinant of the class (constant on the class).
  int class_det(std::size_t c) const { return dets_[c]; }
  /// Class index of a label; throws KernelMissing if absent.
  std::size_t index_of(const ClassLabel& label) const;
  bool is_symmetric(std::size_t c) const;

  /// Label of an invertible matrix; throws SingularMatrix otherwise.
  ClassLabel classify(const Matrix& A) const;
  std::size_t class_of(const Matrix& A) const { return index_of(classify(A)); }

  /// Group elements and a code -> class lookup, built on first use.
  /// Throws GroupTooLarge beyond kMaxGroupOrder.
  const std::vector<std::uint32_t>& elements() const;
  /// Class index of the matrix with the given code (-1 for singular ones).
  int class_of_code(std::uint32_t code) const;

  std::string label_string(std::size_t c) const;

 private:
  void build_lookup() const;

  int n_;
  PrimeField field_;
  std::vector<Poly> irreducibles_;
  std::vector<int> dual_;
  std::vector<ClassLabel> labels_;
  std::vector<Matrix> reps_;
  std::vector<Integer> sizes_;
  std::vector<int> dets_;
  std::map<ClassLabel, std::size_t> index_;
  Integer group_order_;
  mutable std::vector<std::uint32_t> elements_;
  mutable std::vector<int> lookup_;
};

/// All conjugacy classes of GL_n(F_q), n <= 3 (throws UnsupportedRank otherwise).
/// The class equation is checked during construction.
ClassTable enumerate_classes(int n, const PrimeField& field);

/// |GL_n(F_q)|.
Integer gl_order(int n, int q);

}  // namespace epoly::ff
