#pragma once

#include <string>
#include <vector>

#include "epoly/partition.hpp"
#include "epoly/rational_function.hpp"
#include "epoly/series.hpp"

namespace epoly {

/// Genus g and number r of fixed circles; requires 1 <= r <= g + 1.
struct SurfaceData {
  int g = 0;
  int r = 1;

  SurfaceData() = default;
  SurfaceData(int genus, int circles);
  int s() const { return g + 1 - r; }
};

/// Which hook polynomial multiplies a^{+-}_lambda: H_lambda (matched) or H_{lambda'} (transposed).
enum class PairingConvention { matched, transposed };

std::string to_string(PairingConvention c);
PairingConvention parse_convention(const std::string& text);

/// Normalised hook polynomial of lambda evaluated at q^d.
HalfPoly hook_half_poly(const Partition& lambda, int d);
/// Same value as a rational function; throws EmptyPartition for the empty partition.
RationalFunction hook_polynomial(const Partition& lambda, int d);

/// Sum over odd d | n and multisets of partitions of weight n/d.
RationalFunction v_n(int n, const SurfaceData& surf, PairingConvention conv = PairingConvention::matched);
/// Component version with (a+ + a-)^{r-k} (a+ - a-)^k.
RationalFunction v_n_component(int n, const SurfaceData& surf, int k,
                               PairingConvention conv = PairingConvention::matched);

/// (1/2)(q-1)(-u)^{n^2(g-1)} V_n, valid for every g.
RationalFunction e_poly_rational(int n, const SurfaceData& surf, PairingConvention conv = PairingConvention::matched);
/// Same value; throws NotPolynomial unless it is a polynomial in q.
HalfPoly e_poly(int n, const SurfaceData& surf, PairingConvention conv = PairingConvention::matched);

RationalFunction e_poly_component_rational(int n, const SurfaceData& surf, int k,
                                           PairingConvention conv = PairingConvention::matched);
/// Throws EvenK, KOutOfRange or NotPolynomial.
HalfPoly e_poly_component(int n, const SurfaceData& surf, int k,
                          PairingConvention conv = PairingConvention::matched);

/// sum over odd k <= r of binomial(r, k) E_n^k equals E_n.
bool component_sum_check(int n, const SurfaceData& surf, PairingConvention conv = PairingConvention::matched);

/// E_n^k / (q-1)^g at q = 1. Throws NotDivisible if the division leaves a remainder.
Rational euler_char_component(int n, const SurfaceData& surf, int k,
                              PairingConvention conv = PairingConvention::matched);

struct GenFunctionResult {
  TruncatedSeries lhs;
  TruncatedSeries rhs;
  bool equal = false;
};

/// Both sides of the generating-function identity, truncated at T^N.
GenFunctionResult gen_function_sides(int N, const SurfaceData& surf,
                                     PairingConvention conv = PairingConvention::matched);
bool gen_function_check(int N, const SurfaceData& surf, PairingConvention conv = PairingConvention::matched);

/// E-polynomial of the complex character variety of a genus g curve.
RationalFunction hrv_e_poly(int n, int g);

}  // namespace epoly
