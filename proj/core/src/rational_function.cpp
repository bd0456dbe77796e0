#include "epoly/rational_function.hpp"

#include <utility>

#include "epoly/error.hpp"

namespace epoly {

namespace {

// Polynomial remainder of a by b, both stored densely from degree 0.
std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
  const std::size_t bn = b.size();
  const Rational lead_inv = 1 / b.back();
  while (a.size() >= bn) {
    const Rational c = a.back() * lead_inv;
    const std::size_t off = a.size() - bn;
    if (c != 0)
      for (std::size_t j = 0; j < bn; ++j) a[off + j] -= c * b[j];
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

void make_monic(std::vector<Rational>& p) {
  const Rational inv = 1 / p.back();
  for (auto& c : p) c *= inv;
}

}  // namespace

HalfPoly poly_gcd(const HalfPoly& a, const HalfPoly& b) {
  if (a.is_zero()) return b.is_zero() ? HalfPoly() : HalfPoly::from_dense(0, b.dense()) / b.leading();
  if (b.is_zero()) return HalfPoly::from_dense(0, a.dense()) / a.leading();
  std::vector<Rational> x = a.dense();
  std::vector<Rational> y = b.dense();
  if (x.size() < y.size()) std::swap(x, y);
  make_monic(y);
  while (!y.empty()) {
    std::vector<Rational> r = poly_rem(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
    if (!y.empty()) make_monic(y);
  }
  make_monic(x);
  return HalfPoly::from_dense(0, std::move(x));
}

RationalFunction::RationalFunction(const HalfPoly& num, const HalfPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = HalfPoly(1);
    return;
  }
  const int shift = num_.low() - den_.low();
  HalfPoly n = num_.shift(-num_.low());
  HalfPoly d = den_.shift(-den_.low());
  if (!d.is_constant() && !n.is_constant()) {
    const HalfPoly g = poly_gcd(n, d);
    if (!g.is_constant()) {
      n = n.divide_exact(g);
      d = d.divide_exact(g);
    }
  }
  const Rational c = d.trailing();
  if (c != 1) {
    n /= c;
    d /= c;
  }
  num_ = n.shift(shift);
  den_ = std::move(d);
}

HalfPoly RationalFunction::to_half_poly() const {
  if (!is_laurent()) throw Error(ErrorCode::NotPolynomial, to_string() + " has a nontrivial denominator");
  return num_;
}

RationalFunction RationalFunction::adams(int d) const {
  RationalFunction out;
  out.num_ = num_.adams(d);
  out.den_ = den_.adams(d);
  // u -> u^d maps coprime polynomials to coprime polynomials and keeps the
  // constant term of the denominator, so the normal form survives.
  return out;
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction out;
  out.num_ = num_.pow(static_cast<unsigned>(e));
  out.den_ = den_.pow(static_cast<unsigned>(e));
  return out;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

Rational RationalFunction::eval(const Rational& q0) const {
  const Rational d = den_.eval(q0);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes at q = " + epoly::to_string(q0));
  return num_.eval(q0) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_laurent() && o.is_laurent()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_laurent() && o.is_laurent()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_laurent()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

bool cross_equal(const RationalFunction& a, const RationalFunction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace epoly
