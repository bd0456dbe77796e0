#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "epoly/error.hpp"
#include "epoly/rational_function.hpp"

namespace epoly {

inline constexpr int kDefaultOrder = 8;

/// Power series in T truncated after T^order, with coefficients in R.
/// R is Rational or RationalFunction.
template <class R>
class BasicSeries {
 public:
  explicit BasicSeries(int order = kDefaultOrder) : c_(static_cast<std::size_t>(order) + 1, R(0)) {}

  static BasicSeries one(int order = kDefaultOrder) {
    BasicSeries s(order);
    s.c_[0] = R(1);
    return s;
  }
  /// c * T^k (zero when k exceeds the order).
  static BasicSeries monomial(const R& c, int k, int order = kDefaultOrder) {
    BasicSeries s(order);
    if (k <= order) s.c_[k] = c;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int k) const { return c_[k]; }
  R& operator[](int k) { return c_[k]; }
  const std::vector<R>& coefficients() const { return c_; }

  /// Coefficients through T^k survive, the rest are dropped.
  BasicSeries truncated(int k) const {
    BasicSeries s(k);
    for (int i = 0; i <= k && i <= order(); ++i) s.c_[i] = c_[i];
    return s;
  }

  /// Applies u -> u^d to every coefficient and T -> T^d.
  BasicSeries adams(int d) const {
    BasicSeries s(order());
    for (int i = 0; i * d <= order(); ++i) s.c_[i * d] = epoly::adams(c_[i], d);
    return s;
  }

  BasicSeries& operator+=(const BasicSeries& o) {
    for (int i = 0; i <= std::min(order(), o.order()); ++i) c_[i] += o.c_[i];
    return *this;
  }
  BasicSeries& operator-=(const BasicSeries& o) {
    for (int i = 0; i <= std::min(order(), o.order()); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  BasicSeries& operator*=(const R& k) {
    for (auto& x : c_) x *= k;
    return *this;
  }

  friend BasicSeries operator+(BasicSeries a, const BasicSeries& b) { return a += b; }
  friend BasicSeries operator-(BasicSeries a, const BasicSeries& b) { return a -= b; }
  friend BasicSeries operator*(BasicSeries a, const R& k) { return a *= k; }
  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
    const int n = std::min(a.order(), b.order());
    BasicSeries s(n);
    for (int i = 0; i <= n; ++i) {
      if (a.c_[i] == R(0)) continue;
      for (int j = 0; i + j <= n; ++j)
        if (!(b.c_[j] == R(0))) s.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return s;
  }
  friend bool operator==(const BasicSeries& a, const BasicSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<R> c_;
};

using TruncatedSeries = BasicSeries<RationalFunction>;
using RationalSeries = BasicSeries<Rational>;

namespace detail {

template <class R>
void require_unit_constant(const BasicSeries<R>& f) {
  if (!(f[0] == R(1))) throw Error(ErrorCode::ConstantTermNotOne, "series must start with 1");
}

}  // namespace detail

/// Ordinary logarithm of a series with constant term 1.
template <class R>
BasicSeries<R> formal_log(const BasicSeries<R>& f) {
  detail::require_unit_constant(f);
  const int n = f.order();
  BasicSeries<R> g(n);
  for (int k = 1; k <= n; ++k) {
    R acc = f[k] * R(k);
    for (int j = 1; j < k; ++j)
      if (!(g[j] == R(0)) && !(f[k - j] == R(0))) acc -= g[j] * f[k - j] * R(j);
    g[k] = acc * R(make_rational(1, k));
  }
  return g;
}

/// Ordinary exponential of a series with constant term 0.
template <class R>
BasicSeries<R> formal_exp(const BasicSeries<R>& v) {
  if (!(v[0] == R(0))) throw Error(ErrorCode::NonzeroConstantTerm, "series must have zero constant term");
  const int n = v.order();
  BasicSeries<R> e = BasicSeries<R>::one(n);
  for (int k = 1; k <= n; ++k) {
    R acc(0);
    for (int j = 1; j <= k; ++j)
      if (!(v[j] == R(0)) && !(e[k - j] == R(0))) acc += v[j] * e[k - j] * R(j);
    e[k] = acc * R(make_rational(1, k));
  }
  return e;
}

template <class R>
BasicSeries<R> pleth_exp(const BasicSeries<R>& v) {
  if (!(v[0] == R(0))) throw Error(ErrorCode::NonzeroConstantTerm, "Exp needs a zero constant term");
  BasicSeries<R> acc(v.order());
  for (int d = 1; d <= v.order(); ++d) acc += v.adams(d) * R(make_rational(1, d));
  return formal_exp(acc);
}

template <class R>
BasicSeries<R> pleth_log(const BasicSeries<R>& f) {
  if (!(f[0] == R(1))) throw Error(ErrorCode::ConstantTermNotOne, "Log needs constant term 1");
  const BasicSeries<R> l = formal_log(f);
  BasicSeries<R> acc(f.order());
  for (int d = 1; d <= f.order(); ++d) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    acc += l.adams(d) * R(make_rational(mu, d));
  }
  return acc;
}

/// f^c for rational c, via exp(c log f).
template <class R>
BasicSeries<R> rational_exponent_pow(const BasicSeries<R>& f, const Rational& c) {
  return formal_exp(formal_log(f) * R(c));
}

/// Multiplicative inverse of a series with constant term 1.
template <class R>
BasicSeries<R> series_inverse(const BasicSeries<R>& f) {
  detail::require_unit_constant(f);
  const int n = f.order();
  BasicSeries<R> g = BasicSeries<R>::one(n);
  for (int k = 1; k <= n; ++k) {
    R acc(0);
    for (int j = 1; j <= k; ++j)
      if (!(f[j] == R(0))) acc -= f[j] * g[k - j];
    g[k] = acc;
  }
  return g;
}

}  // namespace epoly
