#include "epoly/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "epoly/error.hpp"

namespace epoly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(ErrorCode::InvalidPartition, "parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(ErrorCode::InvalidPartition, "parts must be weakly decreasing");
  }
}

Partition Partition::from_multiplicities(const std::vector<int>& m) {
  std::vector<int> parts;
  for (std::size_t d = m.size(); d-- > 1;)
    for (int k = 0; k < m[d]; ++k) parts.push_back(static_cast<int>(d));
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "0" || s == "[]") return {};
  char sep = '+';
  if (s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorCode::ParseError, "unbalanced bracket in '" + text + "'");
    s = s.substr(1, s.size() - 2);
    sep = ',';
  }
  std::vector<int> parts;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, sep)) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorCode::ParseError, "bad part '" + tok + "' in '" + text + "'");
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(largest()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[j];
  Partition c;
  c.parts_ = std::move(out);
  return c;
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(largest()) + 1, 0);
  for (int p : parts_) ++m[p];
  return m;
}

long Partition::n_lambda() const {
  long s = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
  return s;
}

std::vector<int> Partition::hooks() const {
  const Partition c = conjugate();
  std::vector<int> out;
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j) out.push_back((parts_[i] - j - 1) + (c.parts_[j] - i - 1) + 1);
  return out;
}

int Partition::ell_odd() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2 != 0; }));
}

int Partition::ell_even() const { return length() - ell_odd(); }

Integer Partition::z() const {
  Integer out = 1;
  const auto m = multiplicities();
  for (std::size_t d = 1; d < m.size(); ++d) {
    if (m[d] == 0) continue;
    out *= factorial(static_cast<unsigned long>(m[d]));
    out *= pow_int(Integer(static_cast<long>(d)), static_cast<unsigned long>(m[d]));
  }
  return out;
}

bool Partition::all_parts_even() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

Partition Partition::union_with(const Partition& other) const {
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::stretch(int s) const {
  Partition p = *this;
  for (int& x : p.parts_) x *= s;
  return p;
}

Partition Partition::repeat(int s) const {
  std::vector<int> parts;
  for (int x : parts_)
    for (int k = 0; k < s; ++k) parts.push_back(x);
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

namespace {

void generate(int rem, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (rem == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(rem, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(rem - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  generate(n, n, cur, out);
  return out;
}

Integer partition_count(int n) {
  if (n < 0) return 0;
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (int k = 1;; ++k) {
      const int a = m - k * (3 * k - 1) / 2;
      if (a < 0) break;
      const int b = m - k * (3 * k + 1) / 2;
      Integer term = p[a];
      if (b >= 0) term += p[b];
      if (k % 2 == 1) acc += term;
      else acc -= term;
    }
    p[m] = acc;
  }
  return p[n];
}

HalfPoly centralizer_order_poly(const Partition& lambda) {
  HalfPoly out = HalfPoly::q_power(lambda.weight() + 2 * static_cast<int>(lambda.n_lambda()));
  const auto m = lambda.multiplicities();
  for (std::size_t d = 1; d < m.size(); ++d)
    for (int j = 1; j <= m[d]; ++j) out *= HalfPoly(1) - HalfPoly::q_power(-j);
  return out;
}

HalfPoly gl_order_poly(int n) { return centralizer_order_poly(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))); }

namespace {

void multisets(const std::vector<Partition>& pool, std::size_t start, int rem, PartitionMultiset& cur,
               std::vector<PartitionMultiset>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    const int w = pool[i].weight();
    if (w > rem) break;
    for (int m = 1; m * w <= rem; ++m) {
      cur.emplace_back(pool[i], m);
      multisets(pool, i + 1, rem - m * w, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<PartitionMultiset> partition_multisets(int w) {
  std::vector<Partition> pool;
  for (int k = 1; k <= w; ++k)
    for (auto& p : all_partitions(k)) pool.push_back(std::move(p));
  std::vector<PartitionMultiset> out;
  PartitionMultiset cur;
  multisets(pool, 0, w, cur, out);
  return out;
}

}  // namespace epoly
