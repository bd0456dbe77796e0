#include "epoly/fforacle/class_table.hpp"

#include <algorithm>
#include <functional>

#include "epoly/error.hpp"

namespace epoly::ff {

Integer gl_order(int n, int q) {
  Integer out = 1;
  const Integer qn = pow_int(Integer(q), static_cast<unsigned long>(n));
  for (int i = 0; i < n; ++i) out *= qn - pow_int(Integer(q), static_cast<unsigned long>(i));
  return out;
}

namespace {

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  Matrix out;
  for (const auto& b : blocks) out.n += b.n;
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.n; ++i)
      for (int j = 0; j < b.n; ++j) out.at(off + i, off + j) = b.at(i, j);
    off += b.n;
  }
  return out;
}

Integer centralizer_order(const Partition& lambda, int d, int q) {
  const Rational v = centralizer_order_poly(lambda).adams(d).eval(Rational(q));
  return v.get_num();
}

}  // namespace

ClassTable::ClassTable(int n, const PrimeField& field) : n_(n), field_(field) {
  if (n < 1 || n > 3) throw Error(ErrorCode::UnsupportedRank, "rank " + std::to_string(n) + " is not supported (1..3)");
  irreducibles_ = ff::irreducibles(field_, n);
  for (const auto& f : irreducibles_) {
    const Poly g = poly_dual(field_, f);
    dual_.push_back(static_cast<int>(std::find(irreducibles_.begin(), irreducibles_.end(), g) - irreducibles_.begin()));
  }
  group_order_ = gl_order(n, field_.q());

  ClassLabel current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (left == 0) {
      labels_.push_back(current);
      return;
    }
    if (i == irreducibles_.size()) return;
    rec(i + 1, left);
    const int d = degree(irreducibles_[i]);
    for (int w = 1; w * d <= left; ++w)
      for (const auto& lambda : all_partitions(w)) {
        current.emplace_back(static_cast<int>(i), lambda);
        rec(i + 1, left - w * d);
        current.pop_back();
      }
  };
  rec(0, n);
  std::sort(labels_.begin(), labels_.end());

  Integer total = 0;
  for (std::size_t c = 0; c < labels_.size(); ++c) {
    std::vector<Matrix> blocks;
    Integer cent = 1;
    for (const auto& [i, lambda] : labels_[c]) {
      const Poly& f = irreducibles_[i];
      for (int part : lambda.parts()) blocks.push_back(companion(field_, poly_pow(field_, f, part)));
      cent *= centralizer_order(lambda, degree(f), field_.q());
    }
    reps_.push_back(block_diagonal(blocks));
    sizes_.push_back(group_order_ / cent);
    dets_.push_back(det(field_, reps_.back()));
    total += sizes_.back();
    index_.emplace(labels_[c], c);
  }
  if (total != group_order_) throw Error(ErrorCode::KernelMissing, "class equation fails for GL_" + std::to_string(n));
}

std::size_t ClassTable::index_of(const ClassLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(ErrorCode::KernelMissing, "unknown class label");
  return it->second;
}

bool ClassTable::is_symmetric(std::size_t c) const {
  for (const auto& [i, lambda] : labels_[c]) {
    const int j = dual_[i];
    auto it = std::find_if(labels_[c].begin(), labels_[c].end(), [j](const auto& e) { return e.first == j; });
    if (it == labels_[c].end() || it->second != lambda) return false;
  }
  return true;
}

ClassLabel ClassTable::classify(const Matrix& A) const {
  if (det(field_, A) == 0) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  Poly chi = char_poly(field_, A);
  ClassLabel out;
  for (std::size_t i = 0; i < irreducibles_.size() && degree(chi) > 0; ++i) {
    const Poly& f = irreducibles_[i];
    const int d = degree(f);
    int e = 0;
    Poly quot;
    while (poly_divide(field_, chi, f, quot)) {
      chi = quot;
      ++e;
    }
    if (e == 0) continue;
    const Matrix fA = poly_eval(field_, f, A);
    Matrix power = identity(n_);
    std::vector<int> conj;
    int prev = 0;
    for (int j = 1; j <= e; ++j) {
      power = mat_mul(field_, power, fA);
      const int k = n_ - rank(field_, power);
      if (k == prev) break;
      conj.push_back((k - prev) / d);
      prev = k;
    }
    out.emplace_back(static_cast<int>(i), Partition(conj).conjugate());
  }
  return out;
}

void ClassTable::build_lookup() const {
  if (!lookup_.empty()) return;
  if (group_order_ > kMaxGroupOrder)
    throw Error(ErrorCode::GroupTooLarge, "|GL_" + std::to_string(n_) + "(F_" + std::to_string(field_.q()) +
                                              ")| = " + group_order_.get_str() + " is too large to sweep");
  std::uint32_t total = 1;
  for (int i = 0; i < n_ * n_; ++i) total *= static_cast<std::uint32_t>(field_.q());
  lookup_.assign(total, -1);
  for (std::uint32_t code = 0; code < total; ++code) {
    const Matrix A = decode(field_, n_, code);
    if (det(field_, A) == 0) continue;
    lookup_[code] = static_cast<int>(class_of(A));
    elements_.push_back(code);
  }
}

const std::vector<std::uint32_t>& ClassTable::elements() const {
  build_lookup();
  return elements_;
}

int ClassTable::class_of_code(std::uint32_t code) const {
  build_lookup();
  return lookup_[code];
}

std::string ClassTable::label_string(std::size_t c) const {
  std::string out;
  for (const auto& [i, lambda] : labels_[c]) {
    if (!out.empty()) out += " ";
    out += "(";
    const Poly& f = irreducibles_[i];
    for (std::size_t k = 0; k < f.size(); ++k) out += (k ? "," : "") + std::to_string(f[k]);
    out += ")^" + lambda.to_string();
  }
  return out;
}

ClassTable enumerate_classes(int n, const PrimeField& field) { return ClassTable(n, field); }

}  // namespace epoly::ff
