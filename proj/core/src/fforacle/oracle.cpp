#include "epoly/fforacle/oracle.hpp"

#include <json.hpp>

#include "epoly/error.hpp"

namespace epoly::ff {

std::vector<int> primitive_roots_2n(int n, const PrimeField& field) {
  if (n < 1 || (field.q() - 1) % (2 * n) != 0)
    throw Error(ErrorCode::NoPrimitiveRoot, "F_" + std::to_string(field.q()) + " has no primitive " +
                                                std::to_string(2 * n) + "-th root of unity");
  return field.elements_of_order(2 * n);
}

Oracle::Oracle(int n, int q) {
  table_ = std::make_unique<ClassTable>(n, PrimeField(q));
  if (table_->group_order() > kMaxGroupOrder)
    throw Error(ErrorCode::GroupTooLarge, "|GL_" + std::to_string(n) + "(F_" + std::to_string(q) +
                                              ")| = " + table_->group_order().get_str() + " is too large to sweep");
  kernel_ = std::make_unique<Kernel>(*table_);
  f_ = F_brute(*table_);
  n_ = ff::N(*table_);
  f_plus_ = restrict_det(*table_, f_, 1);
  f_minus_ = restrict_det(*table_, f_, -1);
}

Integer Oracle::evaluate(const ClassFunction& head, const SurfaceData& surf, int xi) const {
  const ClassFunction acc = convolve(*kernel_, head, convolve_power(*table_, *kernel_, n_, surf.s()));
  return acc[table_->class_of(scalar(n(), table_->field().reduce(xi)))];
}

Integer Oracle::count(const SurfaceData& surf, int xi) const {
  return evaluate(convolve_power(*table_, *kernel_, f_, surf.r), surf, xi);
}

Integer Oracle::count_component(const SurfaceData& surf, int xi, int k) const {
  if (k % 2 == 0) throw Error(ErrorCode::EvenK, "component index k = " + std::to_string(k) + " must be odd");
  if (k < 1 || k > surf.r)
    throw Error(ErrorCode::KOutOfRange, "need 1 <= k <= r = " + std::to_string(surf.r) + ", got " + std::to_string(k));
  const ClassFunction head = convolve(*kernel_, convolve_power(*table_, *kernel_, f_plus_, surf.r - k),
                                      convolve_power(*table_, *kernel_, f_minus_, k));
  return evaluate(head, surf, xi);
}

Integer Oracle::count_signs(const SurfaceData& surf, int xi, const std::vector<int>& w) const {
  if (static_cast<int>(w.size()) != surf.r)
    throw Error(ErrorCode::KOutOfRange, "sign tuple must have length r = " + std::to_string(surf.r));
  int product = 1;
  ClassFunction head = delta(*table_, table_->class_of(identity(n())));
  for (int s : w) {
    if (s != 1 && s != -1) throw Error(ErrorCode::KOutOfRange, "sign tuple entries must be +1 or -1");
    product *= s;
    head = convolve(*kernel_, head, s == 1 ? f_plus_ : f_minus_);
  }
  if (product != -1) throw Error(ErrorCode::EvenK, "sign tuple must have product -1");
  return evaluate(head, surf, xi);
}

Integer count_representation_variety(int n, const PrimeField& field, const SurfaceData& surf, int xi,
                                     std::optional<int> k) {
  const Oracle oracle(n, field.q());
  return k ? oracle.count_component(surf, xi, *k) : oracle.count(surf, xi);
}

std::string OracleReport::to_json_line() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["q"] = q;
  j["g"] = g;
  j["r"] = r;
  if (k != 0) j["k"] = k;
  j["xi"] = xi;
  j["counted"] = counted.get_str();
  j["formula"] = formula.get_str();
  j["convention"] = convention;
  j["equal"] = equal;
  return j.dump();
}

OracleReport compare_with_formula(const Oracle& oracle, const SurfaceData& surf, std::optional<int> k,
                                  PairingConvention conv, std::optional<int> xi) {
  const int n = oracle.n();
  const int q = oracle.q();
  OracleReport rep;
  rep.n = n;
  rep.q = q;
  rep.g = surf.g;
  rep.r = surf.r;
  rep.k = k.value_or(0);
  rep.xi = xi ? *xi : primitive_roots_2n(n, oracle.table().field()).front();
  rep.convention = to_string(conv);
  rep.counted = k ? oracle.count_component(surf, rep.xi, *k) : oracle.count(surf, rep.xi);
  const RationalFunction e = k ? e_poly_component_rational(n, surf, *k, conv) : e_poly_rational(n, surf, conv);
  const Rational value = e.eval(Rational(q)) * Rational(oracle.table().group_order());
  rep.equal = is_integer(value) && value.get_num() == rep.counted;
  rep.formula = value.get_num();
  return rep;
}

OracleReport compare_with_formula(int n, int q, const SurfaceData& surf, std::optional<int> k,
                                  PairingConvention conv) {
  return compare_with_formula(Oracle(n, q), surf, k, conv);
}

}  // namespace epoly::ff
