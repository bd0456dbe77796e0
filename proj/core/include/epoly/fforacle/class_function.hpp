#pragma once

#include <cstdint>
#include <vector>

#include "epoly/fforacle/class_table.hpp"
#include "epoly/half_poly.hpp"

namespace epoly::ff {

/// Values of a class function, one per class of a ClassTable.
using ClassFunction = std::vector<Integer>;

/// Number of A-invariant nondegenerate symmetric forms on the class of c, as a polynomial in q.
HalfPoly F_closed_poly(const ClassTable& table, std::size_t c);
ClassFunction F_closed(const ClassTable& table);
/// #{B symmetric invertible : A B A^T = B} by enumeration of symmetric matrices.
ClassFunction F_brute(const ClassTable& table);
/// Predicted degree in q of the nonzero values of F.
Rational F_degree_predicted(const ClassTable& table, std::size_t c);

/// #{B : B (B^T)^{-1} = A}.
ClassFunction N(const ClassTable& table);
/// #{(X, Y) : X Y X^{-1} Y^{-1} = A} by enumeration of pairs.
ClassFunction C_brute(const ClassTable& table);

/// Indicator of the class of A.
ClassFunction delta(const ClassTable& table, std::size_t c);
/// Restriction to classes of the given determinant.
ClassFunction restrict_det(const ClassTable& table, const ClassFunction& f, int det_value);

/// Structure constants: count(c, a, b) = #{B in class a : B^{-1} A_c in class b}.
class Kernel {
 public:
  explicit Kernel(const ClassTable& table);

  std::size_t classes() const { return k_; }
  std::uint32_t count(std::size_t c, std::size_t a, std::size_t b) const { return data_[(c * k_ + a) * k_ + b]; }

 private:
  std::size_t k_;
  std::vector<std::uint32_t> data_;
};

/// (phi * psi)(A) = sum_B phi(B) psi(B^{-1} A). Throws KernelMissing on a size mismatch.
ClassFunction convolve(const Kernel& kernel, const ClassFunction& phi, const ClassFunction& psi);
/// phi^{*e}, with phi^{*0} the indicator of the identity.
ClassFunction convolve_power(const ClassTable& table, const Kernel& kernel, const ClassFunction& phi, int e);

/// Worker count for sweeps, from EPOLY_ORACLE_THREADS (default 1).
unsigned oracle_threads();

}  // namespace epoly::ff
