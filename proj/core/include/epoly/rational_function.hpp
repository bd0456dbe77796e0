#pragma once

#include <string>

#include "epoly/half_poly.hpp"

namespace epoly {

/// Quotient of two HalfPoly values, kept in a canonical form:
///   * the denominator is an ordinary polynomial in u with constant term 1,
///   * numerator and denominator share no factor of positive degree,
///   * any power of u lives in the numerator.
/// With that normalisation equal functions are structurally equal.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const HalfPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : num_(c), den_(1) {}             // NOLINT(google-explicit-constructor)
  RationalFunction(const HalfPoly& num, const HalfPoly& den);

  const HalfPoly& num() const { return num_; }
  const HalfPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == HalfPoly(1); }
  /// True when the denominator is 1, i.e. the value is a Laurent polynomial in u.
  bool is_laurent() const { return den_.is_constant(); }
  /// Throws NotPolynomial unless is_laurent().
  HalfPoly to_half_poly() const;

  RationalFunction adams(int d) const;
  RationalFunction pow(long e) const;
  RationalFunction inverse() const;
  /// Value at q = q0 (requires even exponents on both sides).
  Rational eval(const Rational& q0) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "q") const;

 private:
  void normalize();

  HalfPoly num_;
  HalfPoly den_ = HalfPoly(1);
};

/// Equality by cross multiplication; independent of the normal form.
bool cross_equal(const RationalFunction& a, const RationalFunction& b);

/// Monic gcd of two polynomials in u (Laurent shifts are ignored).
HalfPoly poly_gcd(const HalfPoly& a, const HalfPoly& b);

/// Identity on rationals; lets generic series code apply Adams operations.
inline Rational adams(const Rational& c, int) { return c; }
inline RationalFunction adams(const RationalFunction& f, int d) { return f.adams(d); }

}  // namespace epoly
