#include "epoly/half_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "epoly/error.hpp"

namespace epoly {

HalfPoly::HalfPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

HalfPoly HalfPoly::monomial(const Rational& c, int half_exp) {
  HalfPoly p;
  if (c != 0) {
    p.low_ = half_exp;
    p.coeffs_.push_back(c);
  }
  return p;
}

HalfPoly HalfPoly::from_terms(const std::vector<Term>& terms) {
  std::map<int, Rational> acc;
  for (const auto& [e, c] : terms) acc[e] += c;
  HalfPoly p;
  for (const auto& [e, c] : acc) p += monomial(c, e);
  return p;
}

HalfPoly HalfPoly::from_q_coeffs(std::initializer_list<long> coeffs) {
  std::vector<Rational> dense;
  for (long c : coeffs) {
    dense.emplace_back(c);
    dense.emplace_back(0);
  }
  return from_dense(0, std::move(dense));
}

HalfPoly HalfPoly::from_dense(int low, std::vector<Rational> coeffs) {
  HalfPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void HalfPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  const auto skip = static_cast<int>(first - coeffs_.begin());
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), first);
    low_ += skip;
  }
  if (coeffs_.empty()) low_ = 0;
}

Rational HalfPoly::coeff(int half_exp) const {
  const int i = half_exp - low_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

std::vector<HalfPoly::Term> HalfPoly::terms() const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

std::size_t HalfPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

bool HalfPoly::is_q_laurent() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0 && (low_ + static_cast<int>(i)) % 2 != 0) return false;
  return true;
}

bool HalfPoly::is_q_polynomial() const { return is_q_laurent() && (is_zero() || low_ >= 0); }

bool HalfPoly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

HalfPoly HalfPoly::adams(int d) const {
  if (d == 1 || is_zero()) return *this;
  std::vector<Rational> out((coeffs_.size() - 1) * d + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * d] = coeffs_[i];
  return from_dense(low_ * d, std::move(out));
}

HalfPoly HalfPoly::shift(int k) const {
  HalfPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

HalfPoly HalfPoly::pow(unsigned e) const {
  HalfPoly result(1);
  HalfPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational HalfPoly::eval(const Rational& q0) const {
  if (!is_q_laurent()) throw Error(ErrorCode::OddExponent, "cannot evaluate " + to_string() + " at a value of q");
  if (is_zero()) return 0;
  if (q0 == 0 && low_ < 0) throw Error(ErrorCode::DivisionByZero, "negative power of q at q = 0");
  // low_ is even here; Horner over the even slots, then scale by q0^(low/2).
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (i % 2 != 0) continue;
    acc = acc * q0 + coeffs_[i];
  }
  return acc * pow_rat(q0, low_ / 2);
}

HalfPoly HalfPoly::divide_by_q_minus_one(int times) const {
  HalfPoly cur = *this;
  const HalfPoly q_minus_one = HalfPoly::q() - HalfPoly(1);
  for (int i = 0; i < times; ++i) cur = cur.divide_exact(q_minus_one);
  return cur;
}

HalfPoly HalfPoly::divide_exact(const HalfPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (is_zero()) return {};
  std::vector<Rational> rem = coeffs_;
  const std::vector<Rational>& den = divisor.coeffs_;
  const std::size_t dn = den.size();
  if (rem.size() < dn)
    throw Error(ErrorCode::NotDivisible, to_string() + " is not divisible by " + divisor.to_string());
  std::vector<Rational> quot(rem.size() - dn + 1);
  const Rational lead_inv = 1 / den.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational c = rem[k + dn - 1] * lead_inv;
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= c * den[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw Error(ErrorCode::NotDivisible, to_string() + " is not divisible by " + divisor.to_string());
  return from_dense(low_ - divisor.low_, std::move(quot));
}

HalfPoly HalfPoly::operator-() const {
  HalfPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

HalfPoly& HalfPoly::operator+=(const HalfPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(high(), other.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[other.low_ - lo + i] += other.coeffs_[i];
  trim();
  return *this;
}

HalfPoly& HalfPoly::operator-=(const HalfPoly& other) { return *this += -other; }

HalfPoly operator*(const HalfPoly& a, const HalfPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += t;
    }
  }
  return HalfPoly::from_dense(a.low_ + b.low_, std::move(out));
}

HalfPoly& HalfPoly::operator*=(const HalfPoly& other) { return *this = *this * other; }

HalfPoly& HalfPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

HalfPoly& HalfPoly::operator/=(const Rational& c) {
  if (c == 0) throw Error(ErrorCode::DivisionByZero, "division of a polynomial by zero");
  for (auto& x : coeffs_) x /= c;
  return *this;
}

namespace {

std::string exponent_text(int half_exp, const std::string& var) {
  if (half_exp == 2) return var;
  if (half_exp % 2 == 0) return var + "^" + std::to_string(half_exp / 2);
  return var + "^(" + std::to_string(half_exp) + "/2)";
}

}  // namespace

std::string HalfPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(i);
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << epoly::to_string(mag);
    } else if (mag == 1) {
      out << exponent_text(e, var);
    } else {
      out << epoly::to_string(mag) << "*" << exponent_text(e, var);
    }
  }
  return out.str();
}

}  // namespace epoly
