#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "epoly/epoly.hpp"
#include "epoly/fforacle/class_function.hpp"

namespace epoly::ff {

/// Primitive 2n-th roots of unity in F_q, ascending; throws NoPrimitiveRoot if there are none.
std::vector<int> primitive_roots_2n(int n, const PrimeField& field);

/// Class table, kernel, F and N for one GL_n(F_q), built once.
class Oracle {
 public:
  /// Throws GroupTooLarge beyond kMaxGroupOrder.
  Oracle(int n, int q);

  int n() const { return table_->n(); }
  int q() const { return table_->field().q(); }
  const ClassTable& table() const { return *table_; }
  const Kernel& kernel() const { return *kernel_; }
  const ClassFunction& F() const { return f_; }
  const ClassFunction& N() const { return n_; }

  /// (F^{*r} * N^{*(g-r+1)})(xi I).
  Integer count(const SurfaceData& surf, int xi) const;
  /// Component with k factors of F restricted to det = -1 and r - k to det = 1.
  Integer count_component(const SurfaceData& surf, int xi, int k) const;
  /// Component for a sign tuple w of length r with product -1.
  Integer count_signs(const SurfaceData& surf, int xi, const std::vector<int>& w) const;

 private:
  Integer evaluate(const ClassFunction& head, const SurfaceData& surf, int xi) const;

  std::unique_ptr<ClassTable> table_;
  std::unique_ptr<Kernel> kernel_;
  ClassFunction f_;
  ClassFunction n_;
  ClassFunction f_plus_;
  ClassFunction f_minus_;
};

/// One-shot count; k selects a component.
Integer count_representation_variety(int n, const PrimeField& field, const SurfaceData& surf, int xi,
                                     std::optional<int> k = std::nullopt);

struct OracleReport {
  int n = 0;
  int q = 0;
  int g = 0;
  int r = 0;
  int k = 0;  // 0 for the whole variety
  int xi = 0;
  Integer counted;
  Integer formula;
  std::string convention;
  bool equal = false;

  std::string to_json_line() const;
};

/// Counts points and compares with |GL_n(F_q)| E_n(q) (or E_n^k(q)).
/// xi defaults to the smallest primitive 2n-th root.
OracleReport compare_with_formula(const Oracle& oracle, const SurfaceData& surf, std::optional<int> k = std::nullopt,
                                  PairingConvention conv = PairingConvention::matched,
                                  std::optional<int> xi = std::nullopt);
OracleReport compare_with_formula(int n, int q, const SurfaceData& surf, std::optional<int> k = std::nullopt,
                                  PairingConvention conv = PairingConvention::matched);

}  // namespace epoly::ff
