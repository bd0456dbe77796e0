#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace epoly::ff {

/// The prime field F_q for an odd prime q.
class PrimeField {
 public:
  /// Throws NotPrime unless q is an odd prime.
  explicit PrimeField(int q);

  int q() const { return q_; }
  int add(int a, int b) const { return (a + b) % q_; }
  int sub(int a, int b) const { return (a - b + q_) % q_; }
  int neg(int a) const { return a == 0 ? 0 : q_ - a; }
  int mul(int a, int b) const { return (a * b) % q_; }
  /// Requires a != 0.
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long e) const;
  int reduce(long a) const { return static_cast<int>(((a % q_) + q_) % q_); }

  /// Elements of multiplicative order exactly m, ascending.
  std::vector<int> elements_of_order(int m) const;

 private:
  int q_;
  std::vector<int> inv_;
};

/// Polynomial over F_q, coefficients ascending, no trailing zeros.
using Poly = std::vector<int>;

int degree(const Poly& p);
Poly poly_mul(const PrimeField& F, const Poly& a, const Poly& b);
/// Remainder of a modulo the monic polynomial m.
Poly poly_mod(const PrimeField& F, Poly a, const Poly& m);
/// Exact quotient by a monic divisor; returns false if the division leaves a remainder.
bool poly_divide(const PrimeField& F, const Poly& a, const Poly& m, Poly& quotient);
Poly poly_pow(const PrimeField& F, const Poly& a, int e);
/// t^d f(1/t) / f(0): the polynomial whose roots are the inverse roots of f.
Poly poly_dual(const PrimeField& F, const Poly& f);

/// Monic irreducible polynomials of degree 1..max_degree other than t,
/// ordered by degree then coefficients.
std::vector<Poly> irreducibles(const PrimeField& F, int max_degree);

/// Square matrix of size n <= 3 over F_q, row-major.
struct Matrix {
  int n = 0;
  std::array<int, 9> a{};

  int& at(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
  int at(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix identity(int n);
Matrix scalar(int n, int c);
Matrix mat_mul(const PrimeField& F, const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& x);
int det(const PrimeField& F, const Matrix& x);
int rank(const PrimeField& F, const Matrix& x);
/// Requires det(x) != 0.
Matrix inverse(const PrimeField& F, const Matrix& x);
/// Monic characteristic polynomial.
Poly char_poly(const PrimeField& F, const Matrix& x);
/// p(x) for a polynomial p.
Matrix poly_eval(const PrimeField& F, const Poly& p, const Matrix& x);
Matrix companion(const PrimeField& F, const Poly& f);

/// Base-q code of the entries; codes of n x n matrices are 0..q^(n^2)-1.
std::uint32_t encode(const PrimeField& F, const Matrix& x);
Matrix decode(const PrimeField& F, int n, std::uint32_t code);

}  // namespace epoly::ff
