#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace epoly {

using Integer = mpz_class;
/// mpq_class is kept canonical (lowest terms, positive denominator) by every
/// arithmetic operator, which is exactly the invariant we need.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& r) {
  return is_integer(r) ? r.get_num().get_str() : r.get_str();
}

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Rational pow_rat(const Rational& base, long e) {
  Rational b = base;
  if (e < 0) {
    b = 1 / b;
    e = -e;
  }
  Rational out(1);
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Classical Moebius function.
constexpr int mobius(long n) {
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

}  // namespace epoly
