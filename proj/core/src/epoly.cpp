#include "epoly/epoly.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "epoly/error.hpp"
#include "epoly/symfun.hpp"

namespace epoly {

SurfaceData::SurfaceData(int genus, int circles) : g(genus), r(circles) {
  if (g < 0) throw Error(ErrorCode::InvalidSurface, "genus must be nonnegative");
  if (r < 1 || r > g + 1)
    throw Error(ErrorCode::InvalidSurface,
                "need 1 <= r <= g + 1, got g = " + std::to_string(g) + ", r = " + std::to_string(r));
}

std::string to_string(PairingConvention c) { return c == PairingConvention::matched ? "matched" : "transposed"; }

PairingConvention parse_convention(const std::string& text) {
  if (text == "matched") return PairingConvention::matched;
  if (text == "transposed") return PairingConvention::transposed;
  throw Error(ErrorCode::ParseError, "unknown pairing convention '" + text + "' (use matched or transposed)");
}

HalfPoly hook_half_poly(const Partition& lambda, int d) {
  HalfPoly p = HalfPoly::monomial(1, -d * (2 * static_cast<int>(lambda.n_lambda()) + lambda.weight()));
  for (int h : lambda.hooks()) p *= HalfPoly(1) - HalfPoly::q_power(d * h);
  return p;
}

RationalFunction hook_polynomial(const Partition& lambda, int d) {
  if (lambda.empty()) throw Error(ErrorCode::EmptyPartition, "hook polynomial of the empty partition");
  return RationalFunction(hook_half_poly(lambda, d));
}

namespace {

void check_component(const SurfaceData& surf, int k) {
  if (k % 2 == 0) throw Error(ErrorCode::EvenK, "component index k = " + std::to_string(k) + " must be odd");
  if (k < 1 || k > surf.r)
    throw Error(ErrorCode::KOutOfRange, "need 1 <= k <= r = " + std::to_string(surf.r) + ", got " + std::to_string(k));
}

Partition paired(const Partition& lambda, PairingConvention conv) {
  return conv == PairingConvention::matched ? lambda : lambda.conjugate();
}

// H_lambda(q^d)^e, cached.
RationalFunction hook_power(const Partition& lambda, int d, int e) {
  static std::mutex mutex;
  static std::map<std::tuple<Partition, int, int>, RationalFunction> cache;
  const auto key = std::make_tuple(lambda, d, e);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const HalfPoly h = hook_half_poly(lambda, d);
  const RationalFunction value =
      e >= 0 ? RationalFunction(h.pow(static_cast<unsigned>(e))) : RationalFunction(1, h.pow(static_cast<unsigned>(-e)));
  std::lock_guard lock(mutex);
  return cache.emplace(key, value).first->second;
}

template <class Coef>
RationalFunction v_sum(int n, const SurfaceData& surf, PairingConvention conv, Coef coef) {
  if (n < 1) throw Error(ErrorCode::InvalidPartition, "n must be positive");
  RationalFunction acc;
  HalfPoly poly_acc;
  const bool polynomial = surf.g >= 1;
  for (int d = 1; d <= n; d += 2) {
    if (n % d != 0) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    for (const auto& ms : partition_multisets(n / d)) {
      int m = 0;
      Integer ap = 1, am = 1;
      Integer denom = 1;
      for (const auto& [lambda, k] : ms) {
        m += k;
        ap *= pow_int(a_plus(lambda), static_cast<unsigned long>(k));
        am *= pow_int(a_minus(lambda), static_cast<unsigned long>(k));
        denom *= factorial(static_cast<unsigned long>(k));
      }
      const Integer c = coef(ap, am);
      if (c == 0) continue;
      const Integer num = factorial(static_cast<unsigned long>(m - 1)) * c * mu;
      const Integer den = denom * d;
      Rational w(num, den);
      w.canonicalize();
      if ((m - 1) % 2 != 0) w = -w;
      RationalFunction h(w);
      for (const auto& [lambda, k] : ms) h *= hook_power(paired(lambda, conv), d, (surf.g - 1) * k);
      if (polynomial) poly_acc += h.num();
      else acc += h;
    }
  }
  return polynomial ? RationalFunction(poly_acc) : acc;
}

RationalFunction sign_power_u(int e) { return RationalFunction(HalfPoly::monomial(e % 2 == 0 ? 1 : -1, e)); }

RationalFunction q_minus_one() { return RationalFunction(HalfPoly::q() - HalfPoly(1)); }

HalfPoly require_polynomial(const RationalFunction& f, const std::string& what) {
  if (!f.is_laurent() || !f.num().is_q_polynomial())
    throw Error(ErrorCode::NotPolynomial, what + " is not a polynomial in q: " + f.to_string());
  return f.num();
}

}  // namespace

RationalFunction v_n(int n, const SurfaceData& surf, PairingConvention conv) {
  const auto r = static_cast<unsigned long>(surf.r);
  return v_sum(n, surf, conv, [r](const Integer& ap, const Integer& am) -> Integer { return pow_int(ap, r) - pow_int(am, r); });
}

RationalFunction v_n_component(int n, const SurfaceData& surf, int k, PairingConvention conv) {
  check_component(surf, k);
  const auto r = static_cast<unsigned long>(surf.r);
  const auto kk = static_cast<unsigned long>(k);
  return v_sum(n, surf, conv, [r, kk](const Integer& ap, const Integer& am) {
    return Integer(pow_int(ap + am, r - kk) * pow_int(ap - am, kk));
  });
}

RationalFunction e_poly_rational(int n, const SurfaceData& surf, PairingConvention conv) {
  RationalFunction pre = q_minus_one() * sign_power_u(n * n * (surf.g - 1));
  return pre * v_n(n, surf, conv) * RationalFunction(make_rational(1, 2));
}

HalfPoly e_poly(int n, const SurfaceData& surf, PairingConvention conv) {
  return require_polynomial(e_poly_rational(n, surf, conv), "E_" + std::to_string(n));
}

RationalFunction e_poly_component_rational(int n, const SurfaceData& surf, int k, PairingConvention conv) {
  check_component(surf, k);
  Rational scale(1);
  mpq_div_2exp(scale.get_mpq_t(), scale.get_mpq_t(), static_cast<mp_bitcnt_t>(surf.r));
  RationalFunction pre = q_minus_one() * sign_power_u(n * n * (surf.g - 1));
  return pre * v_n_component(n, surf, k, conv) * RationalFunction(scale);
}

HalfPoly e_poly_component(int n, const SurfaceData& surf, int k, PairingConvention conv) {
  return require_polynomial(e_poly_component_rational(n, surf, k, conv),
                            "E_" + std::to_string(n) + "^" + std::to_string(k));
}

bool component_sum_check(int n, const SurfaceData& surf, PairingConvention conv) {
  RationalFunction sum;
  for (int k = 1; k <= surf.r; k += 2)
    sum += e_poly_component_rational(n, surf, k, conv) *
           RationalFunction(Rational(binomial(static_cast<unsigned long>(surf.r), static_cast<unsigned long>(k))));
  return cross_equal(sum, e_poly_rational(n, surf, conv));
}

Rational euler_char_component(int n, const SurfaceData& surf, int k, PairingConvention conv) {
  const HalfPoly e = require_polynomial(e_poly_component_rational(n, surf, k, conv), "E_n^k");
  return e.divide_by_q_minus_one(surf.g).eval(1);
}

GenFunctionResult gen_function_sides(int N, const SurfaceData& surf, PairingConvention conv) {
  GenFunctionResult out{TruncatedSeries(N), TruncatedSeries(N), false};
  for (int n = 1; n <= N; ++n) out.lhs[n] = v_n(n, surf, conv);

  const auto r = static_cast<unsigned long>(surf.r);
  TruncatedSeries prod = TruncatedSeries::one(N);
  for (int s = 1; s <= N; s *= 2) {
    TruncatedSeries plus(N), minus(N);
    for (int w = 0; w * s <= N; ++w)
      for (const auto& lambda : all_partitions(w)) {
        const RationalFunction h =
            lambda.empty() ? RationalFunction(1) : hook_power(paired(lambda, conv), s, surf.g - 1);
        const Integer ap = pow_int(a_plus(lambda), r);
        const Integer am = pow_int(a_minus(lambda), r);
        if (ap != 0) plus[w * s] += h * RationalFunction(Rational(ap));
        if (am != 0) minus[w * s] += h * RationalFunction(Rational(am));
      }
    const TruncatedSeries ratio = plus * series_inverse(minus);
    prod = prod * rational_exponent_pow(ratio, make_rational(1, s));
  }
  out.rhs = pleth_log(prod);
  out.equal = true;
  for (int n = 0; n <= N; ++n)
    if (!cross_equal(out.lhs[n], out.rhs[n])) out.equal = false;
  return out;
}

bool gen_function_check(int N, const SurfaceData& surf, PairingConvention conv) {
  return gen_function_sides(N, surf, conv).equal;
}

RationalFunction hrv_e_poly(int n, int g) {
  if (n < 1) throw Error(ErrorCode::InvalidPartition, "n must be positive");
  TruncatedSeries s(n);
  for (int w = 0; w <= n; ++w)
    for (const auto& lambda : all_partitions(w))
      s[w] += lambda.empty() ? RationalFunction(1) : hook_power(lambda, 1, 2 * g - 2);
  const TruncatedSeries l = pleth_log(s);
  const RationalFunction qm1 = q_minus_one();
  return qm1 * qm1 * RationalFunction(HalfPoly::q_power(n * n * (g - 1))) * l[n];
}

}  // namespace epoly
