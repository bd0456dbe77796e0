#include "epoly/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "epoly/error.hpp"
#include "epoly/series.hpp"

namespace epoly {

namespace {

using CharKey = std::pair<Partition, Partition>;

std::shared_mutex g_char_mutex;
std::map<CharKey, long> g_char_memo;

std::vector<int> beta_set(const Partition& lambda) {
  const int l = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) {
    const int p = beta[i] - (l - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

long character_rec(const Partition& lambda, const Partition& pi) {
  if (pi.empty()) return lambda.empty() ? 1 : 0;
  const CharKey key{lambda, pi};
  {
    std::shared_lock lock(g_char_mutex);
    auto it = g_char_memo.find(key);
    if (it != g_char_memo.end()) return it->second;
  }
  const int k = pi[0];
  const Partition rest(std::vector<int>(pi.parts().begin() + 1, pi.parts().end()));
  const std::vector<int> beta = beta_set(lambda);
  long value = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> moved = beta;
    moved[i] = target;
    const long sub = character_rec(from_beta_set(std::move(moved)), rest);
    value += (between % 2 == 0) ? sub : -sub;
  }
  std::unique_lock lock(g_char_mutex);
  g_char_memo.emplace(key, value);
  return value;
}

}  // namespace

long sn_character(const Partition& lambda, const Partition& pi) {
  if (lambda.weight() != pi.weight())
    throw Error(ErrorCode::WeightMismatch, lambda.to_string() + " and " + pi.to_string() + " differ in weight");
  return character_rec(lambda, pi);
}

SymFunc SymFunc::single(Basis b, const Partition& p, int degree_bound) {
  SymFunc f;
  f.basis = b;
  f.degree_bound = degree_bound;
  f.terms.emplace(p, Rational(1));
  return f;
}

Rational SymFunc::coeff(const Partition& p) const {
  auto it = terms.find(p);
  return it == terms.end() ? Rational(0) : it->second;
}

void SymFunc::add(const Partition& p, const Rational& c) {
  if (c == 0 || p.weight() > degree_bound) return;
  Rational& slot = terms[p];
  slot += c;
  if (slot == 0) terms.erase(p);
}

void SymFunc::prune() {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0) it = terms.erase(it);
    else ++it;
  }
}

SymFunc power_to_schur(const SymFunc& f) {
  SymFunc out;
  out.basis = Basis::schur;
  out.degree_bound = f.degree_bound;
  for (const auto& [pi, c] : f.terms)
    for (const auto& lambda : all_partitions(pi.weight())) out.add(lambda, c * sn_character(lambda, pi));
  return out;
}

SymFunc schur_to_power(const SymFunc& f) {
  SymFunc out;
  out.basis = Basis::powersum;
  out.degree_bound = f.degree_bound;
  for (const auto& [lambda, c] : f.terms)
    for (const auto& pi : all_partitions(lambda.weight())) {
      Rational w(sn_character(lambda, pi));
      w /= Rational(pi.z());
      out.add(pi, c * w);
    }
  return out;
}

namespace {

// Every lambda with lambda / mu a horizontal strip of n boxes.
void horizontal_strips(const Partition& mu, int n, std::vector<Partition>& out) {
  const int l = mu.length();
  std::vector<int> cur(static_cast<std::size_t>(l) + 1, 0);
  auto rec = [&](auto&& self, int row, int rem) -> void {
    if (row > l) {
      if (rem != 0) return;
      std::vector<int> parts;
      for (int x : cur)
        if (x > 0) parts.push_back(x);
      out.emplace_back(std::move(parts));
      return;
    }
    const int lo = mu[row];
    const int hi = row == 0 ? mu[0] + rem : std::min(mu[row - 1], mu[row] + rem);
    for (int v = lo; v <= hi; ++v) {
      cur[row] = v;
      self(self, row + 1, rem - (v - lo));
    }
  };
  rec(rec, 0, n);
}

SymFunc require_schur(const SymFunc& f) {
  if (f.basis != Basis::schur) return power_to_schur(f);
  return f;
}

}  // namespace

SymFunc pieri_row(const SymFunc& f, int n) {
  const SymFunc s = require_schur(f);
  SymFunc out;
  out.degree_bound = std::max(s.degree_bound, 0);
  for (const auto& [mu, c] : s.terms) {
    if (mu.weight() + n > out.degree_bound) continue;
    std::vector<Partition> strips;
    horizontal_strips(mu, n, strips);
    for (const auto& lambda : strips) out.add(lambda, c);
  }
  return out;
}

SymFunc pieri_col(const SymFunc& f, int n) {
  const SymFunc s = require_schur(f);
  SymFunc out;
  out.degree_bound = s.degree_bound;
  for (const auto& [mu, c] : s.terms) {
    if (mu.weight() + n > out.degree_bound) continue;
    std::vector<Partition> strips;
    horizontal_strips(mu.conjugate(), n, strips);
    for (const auto& lambda : strips) out.add(lambda.conjugate(), c);
  }
  return out;
}

SymFunc pieri_series(const SymFunc& f, const std::function<Rational(int)>& coeffs, bool rows) {
  SymFunc out;
  out.degree_bound = f.degree_bound;
  for (int n = 0; n <= f.degree_bound; ++n) {
    const Rational k = coeffs(n);
    if (k == 0) continue;
    const SymFunc part = rows ? pieri_row(f, n) : pieri_col(f, n);
    for (const auto& [lambda, c] : part.terms) out.add(lambda, k * c);
  }
  return out;
}

SymFunc schur_sum(int N, const std::function<bool(const Partition&)>& pred) {
  SymFunc out;
  out.degree_bound = N;
  for (int n = 0; n <= N; ++n)
    for (const auto& lambda : all_partitions(n))
      if (pred(lambda)) out.add(lambda, 1);
  return out;
}

namespace {

struct CSplit {
  Rational plus = 0;
  Rational minus = 0;
};

// Walks the distinct part sizes of pi, choosing how many copies of each go to
// rho_+, rho_-, 2.tau_s and 2 tau_p.
void c_enumerate(const std::vector<std::pair<int, int>>& blocks, std::size_t idx, const Rational& weight,
                 int rho_minus_weight, CSplit& acc) {
  if (idx == blocks.size()) {
    if (rho_minus_weight % 2 == 0) acc.plus += weight;
    else acc.minus += weight;
    return;
  }
  const auto [m, r] = blocks[idx];
  const Integer mz(m);
  for (int e = 0; 2 * e <= r; ++e)
    for (int c = 0; (m % 2 == 0 || c == 0) && c + 2 * e <= r; ++c)
      for (int b = 0; b + c + 2 * e <= r; ++b) {
        const int a = r - b - c - 2 * e;
        // 2e copies of m in 2 tau_p weigh as e parts of size 2m.
        Integer z = factorial(static_cast<unsigned long>(a)) * factorial(static_cast<unsigned long>(b)) *
                    factorial(static_cast<unsigned long>(c)) * factorial(static_cast<unsigned long>(e));
        z *= pow_int(mz, static_cast<unsigned long>(a + b + c + e)) * pow_int(2, static_cast<unsigned long>(e));
        Rational w = weight / Rational(z);
        if (c % 2 != 0) w = -w;
        c_enumerate(blocks, idx + 1, w, rho_minus_weight + m * b, acc);
      }
}

CSplit c_split(const Partition& pi) {
  std::vector<std::pair<int, int>> blocks;
  const auto mult = pi.multiplicities();
  for (std::size_t d = 1; d < mult.size(); ++d)
    if (mult[d] > 0) blocks.emplace_back(static_cast<int>(d), mult[d]);
  CSplit acc;
  c_enumerate(blocks, 0, Rational(1), 0, acc);
  return acc;
}

}  // namespace

Rational c_pi(const Partition& pi) {
  const CSplit s = c_split(pi);
  return s.plus + s.minus;
}

Rational d_pi(const Partition& pi) {
  const CSplit s = c_split(pi);
  return s.plus - s.minus;
}

CDTable c_d_via_genfun(int N) {
  // [t^r] exp(a t + b t^2) for each m, with a, b read off the two products.
  std::vector<RationalSeries> cser(static_cast<std::size_t>(N) + 1), dser(static_cast<std::size_t>(N) + 1);
  for (int m = 1; m <= N; ++m) {
    const int order = N / m;
    RationalSeries vc(std::max(order, 2)), vd(std::max(order, 2));
    const Rational b = make_rational(1, 2 * m);
    vc[1] = m % 2 != 0 ? make_rational(2, m) : make_rational(1, m);
    vd[1] = m % 2 != 0 ? Rational(0) : make_rational(1, m);
    vc[2] = b;
    vd[2] = b;
    cser[m] = formal_exp(vc);
    dser[m] = formal_exp(vd);
  }
  CDTable out;
  for (int n = 0; n <= N; ++n)
    for (const auto& pi : all_partitions(n)) {
      Rational c = 1, d = 1;
      const auto mult = pi.multiplicities();
      for (std::size_t m = 1; m < mult.size(); ++m) {
        if (mult[m] == 0) continue;
        c *= cser[m][mult[m]];
        d *= dser[m][mult[m]];
      }
      out.c.emplace(pi, c);
      out.d.emplace(pi, d);
    }
  return out;
}

Integer a_plus(const Partition& lambda) {
  Integer out = 1;
  const auto m = lambda.multiplicities();
  for (std::size_t d = 1; d < m.size(); ++d) out *= m[d] + 1;
  return out;
}

Integer a_minus(const Partition& lambda) { return lambda.conjugate().all_parts_even() ? 1 : 0; }

Rational a_plus_by_characters(const Partition& lambda) {
  Rational acc = 0;
  for (const auto& pi : all_partitions(lambda.weight())) acc += pi.sign() * c_pi(pi) * sn_character(lambda, pi);
  return acc;
}

Rational a_minus_by_characters(const Partition& lambda) {
  Rational acc = 0;
  for (const auto& pi : all_partitions(lambda.weight())) acc += pi.sign() * d_pi(pi) * sn_character(lambda, pi);
  return acc;
}

namespace {

// (sum over |mu| <= n of s_mu) * (sum_k sign^k s_(k)), degree-n part only.
SymFunc pieri_product(int n, int sign) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, SymFunc> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({n, sign});
  if (it != cache.end()) return it->second;
  const SymFunc all = schur_sum(n, [](const Partition&) { return true; });
  SymFunc prod = pieri_series(all, [sign](int k) { return Rational(k % 2 == 0 ? 1 : sign); }, true);
  SymFunc top;
  top.degree_bound = n;
  for (const auto& [lambda, c] : prod.terms)
    if (lambda.weight() == n) top.add(lambda, c);
  return cache.emplace(std::make_pair(n, sign), top).first->second;
}

}  // namespace

Rational a_plus_by_pieri(const Partition& lambda) { return pieri_product(lambda.weight(), 1).coeff(lambda.conjugate()); }

Rational a_minus_by_pieri(const Partition& lambda) {
  return pieri_product(lambda.weight(), -1).coeff(lambda.conjugate());
}

}  // namespace epoly
