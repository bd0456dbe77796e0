#include "epoly/fforacle/class_function.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "epoly/error.hpp"

namespace epoly::ff {

namespace {

HalfPoly qp(int e) { return HalfPoly::q_power(e); }

// Invariant symmetric forms on one Jordan block type i^m for t - 1 or t + 1.
HalfPoly linear_block(int i, int m) {
  HalfPoly p;
  int factors = 0;
  if (i % 2 == 1) {
    p = qp((i * m * m + m) / 2);
    factors = (m + 1) / 2;
  } else {
    if (m % 2 == 1) return HalfPoly();
    p = qp(i * m * m / 2);
    factors = m / 2;
  }
  for (int j = 1; j <= factors; ++j) p *= HalfPoly(1) - qp(1 - 2 * j);
  return p;
}

// Same for a self-dual irreducible of degree 2d.
HalfPoly even_block(int i, int m, int d) {
  HalfPoly p = qp(i * d * m * m);
  for (int j = 1; j <= m; ++j) p *= HalfPoly(1) + HalfPoly(j % 2 == 0 ? 1 : -1) * qp(-d * j);
  return p;
}

Integer value_at(const HalfPoly& p, int q) {
  const Rational v = p.eval(Rational(q));
  if (!is_integer(v)) throw Error(ErrorCode::NotDivisible, "non-integral class function value");
  return v.get_num();
}

std::vector<std::uint32_t> inverse_codes(const ClassTable& table) {
  const auto& F = table.field();
  std::vector<std::uint32_t> out;
  for (std::uint32_t code : table.elements()) out.push_back(encode(F, inverse(F, decode(F, table.n(), code))));
  return out;
}

}  // namespace

HalfPoly F_closed_poly(const ClassTable& table, std::size_t c) {
  if (!table.is_symmetric(c)) return HalfPoly();
  HalfPoly out(1);
  for (const auto& [i, lambda] : table.label(c)) {
    const int j = table.dual_index(i);
    const int deg = degree(table.irreducibles()[i]);
    if (j != i) {
      if (i < j) out *= centralizer_order_poly(lambda).adams(deg);
      continue;
    }
    const std::vector<int> m = lambda.multiplicities();
    long cross = 0;
    for (std::size_t a = 1; a < m.size(); ++a)
      for (std::size_t b = a + 1; b < m.size(); ++b) cross += static_cast<long>(a) * m[a] * m[b];
    out *= qp(static_cast<int>(deg * cross));
    for (std::size_t a = 1; a < m.size(); ++a) {
      if (m[a] == 0) continue;
      out *= deg == 1 ? linear_block(static_cast<int>(a), m[a]) : even_block(static_cast<int>(a), m[a], deg / 2);
    }
  }
  return out;
}

ClassFunction F_closed(const ClassTable& table) {
  ClassFunction out;
  for (std::size_t c = 0; c < table.size(); ++c) out.push_back(value_at(F_closed_poly(table, c), table.field().q()));
  return out;
}

Rational F_degree_predicted(const ClassTable& table, std::size_t c) {
  Rational out = 0;
  for (const auto& [i, lambda] : table.label(c)) {
    const int deg = degree(table.irreducibles()[i]);
    if (deg == 1 && table.dual_index(i) == i) out += make_rational(lambda.ell_odd(), 2);
    out += Rational(deg) * (Rational(lambda.n_lambda()) + make_rational(lambda.weight(), 2));
  }
  return out;
}

ClassFunction F_brute(const ClassTable& table) {
  const auto& F = table.field();
  const int n = table.n();
  const int q = F.q();
  std::vector<Matrix> forms;
  long total = 1;
  for (int i = 0; i < n * (n + 1) / 2; ++i) total *= q;
  for (long code = 0; code < total; ++code) {
    Matrix B;
    B.n = n;
    long x = code;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        B.at(i, j) = B.at(j, i) = static_cast<int>(x % q);
        x /= q;
      }
    if (det(F, B) != 0) forms.push_back(B);
  }
  ClassFunction out;
  for (std::size_t c = 0; c < table.size(); ++c) {
    const Matrix& A = table.representative(c);
    const Matrix At = transpose(A);
    long count = 0;
    for (const auto& B : forms)
      if (mat_mul(F, mat_mul(F, A, B), At) == B) ++count;
    out.emplace_back(count);
  }
  return out;
}

ClassFunction N(const ClassTable& table) {
  const auto& F = table.field();
  std::vector<Integer> hits(table.size(), 0);
  for (std::uint32_t code : table.elements()) {
    const Matrix B = decode(F, table.n(), code);
    const Matrix A = mat_mul(F, B, inverse(F, transpose(B)));
    hits[static_cast<std::size_t>(table.class_of_code(encode(F, A)))] += 1;
  }
  ClassFunction out;
  for (std::size_t c = 0; c < table.size(); ++c) out.push_back(Integer(hits[c] / table.class_size(c)));
  return out;
}

ClassFunction C_brute(const ClassTable& table) {
  if (table.group_order() > 5000)
    throw Error(ErrorCode::GroupTooLarge, "commutator enumeration needs |G| <= 5000");
  const auto& F = table.field();
  const auto& elems = table.elements();
  const auto inv = inverse_codes(table);
  std::vector<Integer> hits(table.size(), 0);
  for (std::size_t x = 0; x < elems.size(); ++x) {
    const Matrix X = decode(F, table.n(), elems[x]);
    const Matrix Xi = decode(F, table.n(), inv[x]);
    for (std::size_t y = 0; y < elems.size(); ++y) {
      const Matrix Y = decode(F, table.n(), elems[y]);
      const Matrix Yi = decode(F, table.n(), inv[y]);
      const Matrix A = mat_mul(F, mat_mul(F, X, Y), mat_mul(F, Xi, Yi));
      hits[static_cast<std::size_t>(table.class_of_code(encode(F, A)))] += 1;
    }
  }
  ClassFunction out;
  for (std::size_t c = 0; c < table.size(); ++c) out.push_back(Integer(hits[c] / table.class_size(c)));
  return out;
}

ClassFunction delta(const ClassTable& table, std::size_t c) {
  ClassFunction out(table.size(), 0);
  out[c] = 1;
  return out;
}

ClassFunction restrict_det(const ClassTable& table, const ClassFunction& f, int det_value) {
  ClassFunction out = f;
  const int target = table.field().reduce(det_value);
  for (std::size_t c = 0; c < table.size(); ++c)
    if (table.class_det(c) != target) out[c] = 0;
  return out;
}

unsigned oracle_threads() {
  const char* env = std::getenv("EPOLY_ORACLE_THREADS");
  if (env == nullptr) return 1;
  try {
    const unsigned long v = std::stoul(env);
    return v == 0 ? 1u : static_cast<unsigned>(std::min(v, 64ul));
  } catch (const std::exception&) {
    return 1;
  }
}

Kernel::Kernel(const ClassTable& table) : k_(table.size()), data_(k_ * k_ * k_, 0) {
  const auto& F = table.field();
  const auto& elems = table.elements();
  const auto inv = inverse_codes(table);
  std::vector<int> cls;
  for (std::uint32_t code : elems) cls.push_back(table.class_of_code(code));

  auto work = [&](std::size_t c) {
    const Matrix& A = table.representative(c);
    std::uint32_t* slice = data_.data() + c * k_ * k_;
    for (std::size_t x = 0; x < elems.size(); ++x) {
      const Matrix rest = mat_mul(F, decode(F, table.n(), inv[x]), A);
      const auto a = static_cast<std::size_t>(cls[x]);
      const auto b = static_cast<std::size_t>(table.class_of_code(encode(F, rest)));
      ++slice[a * k_ + b];
    }
  };
  const unsigned threads = std::min<unsigned>(oracle_threads(), static_cast<unsigned>(k_));
  if (threads <= 1) {
    for (std::size_t c = 0; c < k_; ++c) work(c);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t c = t; c < k_; c += threads) work(c);
    });
  for (auto& th : pool) th.join();
}

ClassFunction convolve(const Kernel& kernel, const ClassFunction& phi, const ClassFunction& psi) {
  const std::size_t k = kernel.classes();
  if (phi.size() != k || psi.size() != k)
    throw Error(ErrorCode::KernelMissing, "class function does not match the kernel");
  ClassFunction out(k, 0);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t a = 0; a < k; ++a) {
      if (phi[a] == 0) continue;
      Integer inner = 0;
      for (std::size_t b = 0; b < k; ++b) {
        const std::uint32_t m = kernel.count(c, a, b);
        if (m != 0 && psi[b] != 0) inner += psi[b] * m;
      }
      out[c] += phi[a] * inner;
    }
  return out;
}

ClassFunction convolve_power(const ClassTable& table, const Kernel& kernel, const ClassFunction& phi, int e) {
  ClassFunction out = delta(table, table.class_of(identity(table.n())));
  for (int i = 0; i < e; ++i) out = convolve(kernel, out, phi);
  return out;
}

}  // namespace epoly::ff
