#pragma once

#include <functional>
#include <map>
#include <utility>

#include "epoly/partition.hpp"
#include "epoly/rational.hpp"

namespace epoly {

/// chi^lambda evaluated on the class of cycle type pi (Murnaghan-Nakayama,
/// memoised). Throws WeightMismatch when |lambda| != |pi|.
long sn_character(const Partition& lambda, const Partition& pi);

enum class Basis { schur, powersum };

/// Finite linear combination of s_lambda or p_pi with rational coefficients,
/// kept up to total degree `degree_bound`.
struct SymFunc {
  Basis basis = Basis::schur;
  int degree_bound = 8;
  std::map<Partition, Rational> terms;

  static SymFunc single(Basis b, const Partition& p, int degree_bound = 8);
  Rational coeff(const Partition& p) const;
  void add(const Partition& p, const Rational& c);
  void prune();

  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.basis == b.basis && a.terms == b.terms;
  }
};

SymFunc power_to_schur(const SymFunc& f);
SymFunc schur_to_power(const SymFunc& f);

/// f * s_(n): add n boxes, at most one per column.
SymFunc pieri_row(const SymFunc& f, int n);
/// f * s_(1^n): add n boxes, at most one per row.
SymFunc pieri_col(const SymFunc& f, int n);
/// Product of a Schur expansion with sum_n coeffs[n] * s_(n) (row) or
/// s_(1^n) (col), through degree f.degree_bound.
SymFunc pieri_series(const SymFunc& f, const std::function<Rational(int)>& coeffs, bool rows);

/// sum of s_lambda over |lambda| <= N with pred(lambda).
SymFunc schur_sum(int N, const std::function<bool(const Partition&)>& pred);

/// C_pi and D_pi by enumerating all decompositions of pi.
Rational c_pi(const Partition& pi);
Rational d_pi(const Partition& pi);

struct CDTable {
  std::map<Partition, Rational> c;
  std::map<Partition, Rational> d;
};
/// Coefficients of p_pi, |pi| <= N, in the two exponential products.
CDTable c_d_via_genfun(int N);

/// Closed forms indexed by lambda itself.
Integer a_plus(const Partition& lambda);
Integer a_minus(const Partition& lambda);

/// sum_pi sgn(pi) C_pi chi^lambda_pi (resp. D_pi).
Rational a_plus_by_characters(const Partition& lambda);
Rational a_minus_by_characters(const Partition& lambda);

/// Coefficient of s_{lambda'} in (sum s_mu)(sum s_n), resp. (sum s_mu)(sum (-1)^n s_n).
Rational a_plus_by_pieri(const Partition& lambda);
Rational a_minus_by_pieri(const Partition& lambda);

}  // namespace epoly
