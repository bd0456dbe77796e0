#include "epoly/fforacle/field.hpp"

#include <algorithm>
#include <string>

#include "epoly/error.hpp"

namespace epoly::ff {

PrimeField::PrimeField(int q) : q_(q) {
  bool prime = q >= 2;
  for (int p = 2; prime && p * p <= q; ++p)
    if (q % p == 0) prime = false;
  if (!prime || q == 2) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not an odd prime");
  if (q > 46340) throw Error(ErrorCode::NotPrime, "field size " + std::to_string(q) + " is out of range");
  inv_.assign(static_cast<std::size_t>(q), 0);
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (a * b % q == 1) {
        inv_[a] = b;
        break;
      }
}

int PrimeField::pow(int a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int out = 1;
  int base = a % q_;
  while (e > 0) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

std::vector<int> PrimeField::elements_of_order(int m) const {
  std::vector<int> out;
  for (int a = 1; a < q_; ++a) {
    int x = a;
    int ord = 1;
    while (x != 1) {
      x = mul(x, a);
      ++ord;
    }
    if (ord == m) out.push_back(a);
  }
  return out;
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

Poly poly_mul(const PrimeField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  trim(out);
  return out;
}

Poly poly_mod(const PrimeField& F, Poly a, const Poly& m) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int c = a.back();
    const std::size_t off = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[off + j] = F.sub(a[off + j], F.mul(c, m[j]));
    trim(a);
  }
  return a;
}

bool poly_divide(const PrimeField& F, const Poly& a, const Poly& m, Poly& quotient) {
  const std::size_t dm = m.size() - 1;
  if (a.size() < m.size()) return a.empty();
  Poly r = a;
  Poly quot(r.size() - dm, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const int c = r[k + dm];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) r[k + j] = F.sub(r[k + j], F.mul(c, m[j]));
  }
  for (std::size_t j = 0; j < dm; ++j)
    if (r[j] != 0) return false;
  quotient = std::move(quot);
  return true;
}

Poly poly_pow(const PrimeField& F, const Poly& a, int e) {
  Poly out{1};
  for (int i = 0; i < e; ++i) out = poly_mul(F, out, a);
  return out;
}

Poly poly_dual(const PrimeField& F, const Poly& f) {
  Poly out(f.rbegin(), f.rend());
  const int c = F.inv(out.back());
  for (int& x : out) x = F.mul(x, c);
  return out;
}

std::vector<Poly> irreducibles(const PrimeField& F, int max_degree) {
  const int q = F.q();
  std::vector<Poly> out;
  for (int d = 1; d <= max_degree; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (long code = 0; code < count; ++code) {
      Poly p(static_cast<std::size_t>(d) + 1, 0);
      long c = code;
      for (int i = 0; i < d; ++i) {
        p[i] = static_cast<int>(c % q);
        c /= q;
      }
      p[d] = 1;
      if (p[0] == 0) continue;
      bool irreducible = true;
      // A reducible p has an irreducible factor of degree at most d/2.
      for (const auto& f : out) {
        if (2 * degree(f) > d) break;
        Poly quot;
        if (poly_divide(F, p, f, quot)) {
          irreducible = false;
          break;
        }
      }
      if (irreducible) out.push_back(std::move(p));
    }
  }
  return out;
}

Matrix identity(int n) { return scalar(n, 1); }

Matrix scalar(int n, int c) {
  Matrix m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

Matrix mat_mul(const PrimeField& F, const Matrix& x, const Matrix& y) {
  Matrix out;
  out.n = x.n;
  const int q = F.q();
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      long acc = 0;
      for (int k = 0; k < x.n; ++k) acc += static_cast<long>(x.at(i, k)) * y.at(k, j);
      out.at(i, j) = static_cast<int>(acc % q);
    }
  return out;
}

Matrix transpose(const Matrix& x) {
  Matrix out;
  out.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) out.at(i, j) = x.at(j, i);
  return out;
}

int det(const PrimeField& F, const Matrix& x) {
  switch (x.n) {
    case 1: return x.at(0, 0);
    case 2: return F.reduce(static_cast<long>(x.at(0, 0)) * x.at(1, 1) - static_cast<long>(x.at(0, 1)) * x.at(1, 0));
    case 3: {
      long d = 0;
      d += static_cast<long>(x.at(0, 0)) * (x.at(1, 1) * x.at(2, 2) - x.at(1, 2) * x.at(2, 1));
      d -= static_cast<long>(x.at(0, 1)) * (x.at(1, 0) * x.at(2, 2) - x.at(1, 2) * x.at(2, 0));
      d += static_cast<long>(x.at(0, 2)) * (x.at(1, 0) * x.at(2, 1) - x.at(1, 1) * x.at(2, 0));
      return F.reduce(d);
    }
    default: return 1;
  }
}

int rank(const PrimeField& F, const Matrix& x) {
  Matrix m = x;
  int r = 0;
  for (int col = 0; col < m.n && r < m.n; ++col) {
    int pivot = -1;
    for (int i = r; i < m.n; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < m.n; ++j) std::swap(m.at(r, j), m.at(pivot, j));
    const int inv = F.inv(m.at(r, col));
    for (int i = r + 1; i < m.n; ++i) {
      const int f = F.mul(m.at(i, col), inv);
      if (f == 0) continue;
      for (int j = col; j < m.n; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

Matrix inverse(const PrimeField& F, const Matrix& x) {
  const int n = x.n;
  Matrix m = x;
  Matrix out = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (m.at(pivot, col) == 0) ++pivot;
    for (int j = 0; j < n; ++j) {
      std::swap(m.at(col, j), m.at(pivot, j));
      std::swap(out.at(col, j), out.at(pivot, j));
    }
    const int inv = F.inv(m.at(col, col));
    for (int j = 0; j < n; ++j) {
      m.at(col, j) = F.mul(m.at(col, j), inv);
      out.at(col, j) = F.mul(out.at(col, j), inv);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || m.at(i, col) == 0) continue;
      const int f = m.at(i, col);
      for (int j = 0; j < n; ++j) {
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(col, j)));
        out.at(i, j) = F.sub(out.at(i, j), F.mul(f, out.at(col, j)));
      }
    }
  }
  return out;
}

Poly char_poly(const PrimeField& F, const Matrix& x) {
  long tr = 0;
  for (int i = 0; i < x.n; ++i) tr += x.at(i, i);
  switch (x.n) {
    case 1: return {F.neg(x.at(0, 0)), 1};
    case 2: return {det(F, x), F.neg(F.reduce(tr)), 1};
    case 3: {
      long minors = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          minors += static_cast<long>(x.at(i, i)) * x.at(j, j) - static_cast<long>(x.at(i, j)) * x.at(j, i);
      return {F.neg(det(F, x)), F.reduce(minors), F.neg(F.reduce(tr)), 1};
    }
    default: return {1};
  }
}

Matrix poly_eval(const PrimeField& F, const Poly& p, const Matrix& x) {
  Matrix acc;
  acc.n = x.n;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = mat_mul(F, acc, x);
    for (int k = 0; k < x.n; ++k) acc.at(k, k) = F.add(acc.at(k, k), p[i]);
  }
  return acc;
}

Matrix companion(const PrimeField& F, const Poly& f) {
  Matrix m;
  m.n = degree(f);
  for (int i = 1; i < m.n; ++i) m.at(i, i - 1) = 1;
  for (int i = 0; i < m.n; ++i) m.at(i, m.n - 1) = F.neg(f[i]);
  return m;
}

std::uint32_t encode(const PrimeField& F, const Matrix& x) {
  std::uint32_t code = 0;
  for (int i = x.n * x.n; i-- > 0;) code = code * static_cast<std::uint32_t>(F.q()) + static_cast<std::uint32_t>(x.a[i]);
  return code;
}

Matrix decode(const PrimeField& F, int n, std::uint32_t code) {
  Matrix m;
  m.n = n;
  for (int i = 0; i < n * n; ++i) {
    m.a[i] = static_cast<int>(code % static_cast<std::uint32_t>(F.q()));
    code /= static_cast<std::uint32_t>(F.q());
  }
  return m;
}

}  // namespace epoly::ff
