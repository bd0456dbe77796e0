#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "epoly/rational.hpp"

namespace epoly {

/// Laurent polynomial with rational coefficients in the variable u, u^2 = q.
///
/// Exponents count half-powers of q: the term c*u^e stands for c*q^(e/2).
/// Storage is dense between the lowest and highest nonzero exponent, with no
/// leading or trailing zeros, so two equal values are structurally equal.
class HalfPoly {
 public:
  using Term = std::pair<int, Rational>;

  HalfPoly() = default;
  HalfPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  HalfPoly(long c) : HalfPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static HalfPoly monomial(const Rational& c, int half_exp);
  /// q^k, i.e. u^(2k).
  static HalfPoly q_power(int k) { return monomial(1, 2 * k); }
  /// The variable q itself.
  static HalfPoly q() { return q_power(1); }
  /// The variable u = q^(1/2).
  static HalfPoly u() { return monomial(1, 1); }
  /// Builds from (half-exponent, coefficient) pairs; repeated exponents add up.
  static HalfPoly from_terms(const std::vector<Term>& terms);
  /// Polynomial in q from ascending coefficients c0 + c1 q + c2 q^2 + ...
  static HalfPoly from_q_coeffs(std::initializer_list<long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && low_ == 0); }
  /// Lowest / highest half-exponent with a nonzero coefficient. Zero has none;
  /// both return 0 then.
  int low() const { return low_; }
  int high() const { return coeffs_.empty() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int half_exp) const;
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& trailing() const { return coeffs_.front(); }
  /// Nonzero terms, ascending by exponent.
  std::vector<Term> terms() const;
  std::size_t term_count() const;

  /// True iff every stored exponent is even, i.e. the value lies in Q[q, 1/q].
  bool is_q_laurent() const;
  /// True iff every exponent is even and nonnegative.
  bool is_q_polynomial() const;
  bool has_integer_coefficients() const;

  /// Substitutes u -> u^d.
  HalfPoly adams(int d) const;
  /// Multiplies by u^k.
  HalfPoly shift(int k) const;
  HalfPoly pow(unsigned e) const;
  /// Value at q = q0; throws OddExponent if some exponent is odd.
  Rational eval(const Rational& q0) const;
  /// Exact quotient by (q - 1)^times; throws NotDivisible on a remainder.
  HalfPoly divide_by_q_minus_one(int times) const;
  /// Exact quotient; throws NotDivisible when divisor does not divide.
  HalfPoly divide_exact(const HalfPoly& divisor) const;

  HalfPoly operator-() const;
  HalfPoly& operator+=(const HalfPoly& other);
  HalfPoly& operator-=(const HalfPoly& other);
  HalfPoly& operator*=(const HalfPoly& other);
  HalfPoly& operator*=(const Rational& c);
  HalfPoly& operator/=(const Rational& c);

  friend HalfPoly operator+(HalfPoly a, const HalfPoly& b) { return a += b; }
  friend HalfPoly operator-(HalfPoly a, const HalfPoly& b) { return a -= b; }
  friend HalfPoly operator*(const HalfPoly& a, const HalfPoly& b);
  friend HalfPoly operator*(HalfPoly a, const Rational& c) { return a *= c; }
  friend HalfPoly operator*(const Rational& c, HalfPoly a) { return a *= c; }
  friend HalfPoly operator/(HalfPoly a, const Rational& c) { return a /= c; }
  friend bool operator==(const HalfPoly& a, const HalfPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Human readable form in q, descending, e.g. "q^2 - 2*q + 1" or "q^(3/2)".
  std::string to_string(const std::string& var = "q") const;

  // Dense access used by the polynomial kernels in rational_function.cpp.
  const std::vector<Rational>& dense() const { return coeffs_; }
  static HalfPoly from_dense(int low, std::vector<Rational> coeffs);

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;  // coeffs_[i] multiplies u^(low_ + i)
};

}  // namespace epoly
