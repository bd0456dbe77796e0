#include "verify.hpp"

#include <functional>
#include <map>

#include "epoly/error.hpp"
#include "epoly/fforacle/oracle.hpp"
#include "epoly/symfun.hpp"

namespace epoly::cli {

namespace {

using RF = RationalFunction;

RF qpoly(std::initializer_list<long> coeffs) { return RF(HalfPoly::from_q_coeffs(coeffs)); }
RF num(long c) { return RF(c); }
RF rat(long a, long b) { return RF(make_rational(a, b)); }
RF gl(int n) { return RF(gl_order_poly(n)); }
RF ipow(long base, int e) { return RF(Rational(pow_int(Integer(base), static_cast<unsigned long>(e)))); }

// Printed closed forms for n = 1, 2, 3.
RF printed_e(int n, int g, int r) {
  const RF half_qm1 = rat(1, 2) * qpoly({-1, 1});
  const long h = g - 1;
  switch (n) {
    case 1: return ipow(2, r - 1) * qpoly({-1, 1}).pow(g);
    case 2:
      return half_qm1 * gl(2).pow(h) *
             (ipow(2, r) + (ipow(3, r) - num(1)) / qpoly({0, 1}).pow(h) -
              ipow(2, 2 * r - 1) / qpoly({1, 1}).pow(h));
    default:
      return half_qm1 * gl(3).pow(h) *
             (ipow(2, r) + ipow(4, r) / qpoly({0, 1}).pow(3 * h) + ipow(4, r) / qpoly({0, 1, 1}).pow(h) -
              ipow(4, r) / qpoly({1, 1, 1}).pow(h) - ipow(6, r) / qpoly({0, 1, 1, 1}).pow(h) +
              ipow(8, r) / (num(3) * qpoly({1, 1}).pow(h) * qpoly({1, 1, 1}).pow(h)) -
              ipow(2, r) / (num(3) * qpoly({-1, 1}).pow(h) * qpoly({-1, 0, 1}).pow(h)));
  }
}

// Printed component forms for n = 2, 3; the n = 3 term with (q+1)^{g-1} is read as (q-1)^{g-1}.
RF printed_component(int n, int g, int r, int k) {
  const long h = g - 1;
  const RF pre = qpoly({-1, 1}).pow(g);
  if (n == 2)
    return pre * (qpoly({0, -1, 0, 1}).pow(h) + ipow(2, r - k) * qpoly({-1, 0, 1}).pow(h) -
                  ipow(2, r - 1) * qpoly({0, -1, 1}).pow(h));
  const RF q21 = qpoly({-1, 0, 1}).pow(h);
  return pre * (qpoly({0, 0, 0, -1, 0, 0, 1}).pow(h) * q21 + ipow(2, r) * qpoly({-1, 0, 0, 1}).pow(h) * q21 +
                ipow(2, r) * qpoly({0, 0, -1, 0, 0, 1}).pow(h) * qpoly({-1, 1}).pow(h) +
                ipow(4, r) * rat(1, 3) * qpoly({0, 0, 0, 1}).pow(h) * qpoly({-1, 1}).pow(2 * h) -
                rat(1, 3) * qpoly({0, 0, 0, 1, 1, 1}).pow(h) - ipow(2, r) * qpoly({0, 0, 0, -1, 1}).pow(h) * q21 -
                ipow(3, r) * qpoly({0, 0, -1, 1}).pow(h) * q21);
}

std::string where(int n, int g, int r) {
  return "n=" + std::to_string(n) + " g=" + std::to_string(g) + " r=" + std::to_string(r);
}

struct Tally {
  SuiteResult res;
  int checks = 0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      res.passed = false;
      if (res.failures.size() < 20) res.failures.push_back(what);
    }
  }
  SuiteResult done(const std::string& what) {
    res.summary = std::to_string(checks) + " " + what;
    return res;
  }
};

SuiteResult closed_form(const Request&) {
  Tally t;
  for (int g = 1; g <= 4; ++g)
    for (int r = 1; r <= g + 1; ++r)
      for (int n = 1; n <= 3; ++n)
        t.check(cross_equal(e_poly_rational(n, SurfaceData(g, r)), printed_e(n, g, r)), "E_n " + where(n, g, r));
  return t.done("printed E_1, E_2, E_3 identities");
}

SuiteResult telescope(const Request& req) {
  std::vector<std::pair<int, int>> surfaces{{0, 1}, {1, 1}, {1, 2}};
  int top = 6;
  if (req.surface_given) {
    if (req.g > 1) throw Error(ErrorCode::InvalidSurface, "telescope checks need g = 0 or g = 1");
    surfaces = {{req.g, req.r}};
    top = req.N;
  }
  Tally t;
  for (auto [g, r] : surfaces) {
    const SurfaceData surf(g, r);
    for (int n = 1; n <= top; ++n) {
      RF expected;
      if (g == 0) expected = RF(n == 1 ? 1 : 0);
      else expected = RF(r) * qpoly({-1, 1});
      t.check(cross_equal(e_poly_rational(n, surf), expected), "E_n " + where(n, g, r));
    }
    t.check(gen_function_check(top, surf), "generating function " + where(top, g, r));
  }
  return t.done("telescoping checks");
}

SuiteResult genfun(const Request&) {
  Tally t;
  for (auto [g, r] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}})
    for (int N : {4, 6}) t.check(gen_function_check(N, SurfaceData(g, r)), "identity " + where(N, g, r));
  return t.done("generating function identities");
}

SuiteResult coefficients(const Request&) {
  Tally t;
  for (int w = 1; w <= 8; ++w)
    for (const auto& lambda : all_partitions(w)) {
      const Rational ap(a_plus(lambda)), am(a_minus(lambda));
      t.check(ap == a_plus_by_characters(lambda) && ap == a_plus_by_pieri(lambda), "a+ " + lambda.to_string());
      t.check(am == a_minus_by_characters(lambda) && am == a_minus_by_pieri(lambda), "a- " + lambda.to_string());
    }
  const CDTable table = c_d_via_genfun(8);
  for (int w = 0; w <= 8; ++w)
    for (const auto& pi : all_partitions(w)) {
      t.check(table.c.count(pi) ? table.c.at(pi) == c_pi(pi) : c_pi(pi) == 0, "C_pi " + pi.to_string());
      t.check(table.d.count(pi) ? table.d.at(pi) == d_pi(pi) : d_pi(pi) == 0, "D_pi " + pi.to_string());
    }
  return t.done("coefficient agreements");
}

SuiteResult components(const Request&) {
  Tally t;
  for (int g = 0; g <= 3; ++g)
    for (int r = 1; r <= g + 1; ++r) {
      const SurfaceData surf(g, r);
      for (int n = 1; n <= 4; ++n) {
        t.check(component_sum_check(n, surf), "binomial sum " + where(n, g, r));
        if (n % 2 == 1)
          for (int k = 3; k <= r; k += 2)
            t.check(cross_equal(e_poly_component_rational(n, surf, k), e_poly_component_rational(n, surf, 1)),
                    "k-independence " + where(n, g, r));
      }
      if (g >= 1)
        for (int k = 1; k <= r; k += 2)
          for (int n = 2; n <= 3; ++n)
            t.check(cross_equal(e_poly_component_rational(n, surf, k), printed_component(n, g, r, k)),
                    "printed E_n^k " + where(n, g, r) + " k=" + std::to_string(k));
    }
  return t.done("component checks");
}

SuiteResult euler(const Request&) {
  Tally t;
  for (int g = 2; g <= 4; ++g)
    for (int n = 1; n <= 9; ++n) {
      if (n % 2 == 0 && n > 8) continue;
      Rational expected = 0;
      if (n % 2 == 1) expected = Rational(mobius(n)) * Rational(pow_int(Integer(n), static_cast<unsigned long>(g - 2)));
      for (int r : {1, g + 1})
        for (int k = 1; k <= r; k += 2)
          t.check(euler_char_component(n, SurfaceData(g, r), k) == expected,
                  "chi " + where(n, g, r) + " k=" + std::to_string(k));
    }
  return t.done("Euler characteristics");
}

SuiteResult f_formulas(const Request&) {
  Tally t;
  for (int n = 1; n <= 3; ++n)
    for (int q : {3, 5}) {
      const ff::ClassTable table(n, ff::PrimeField(q));
      const ff::ClassFunction closed = ff::F_closed(table);
      const ff::ClassFunction brute = ff::F_brute(table);
      Integer mass = 0;
      for (std::size_t c = 0; c < table.size(); ++c) {
        t.check(closed[c] == brute[c], "F on " + table.label_string(c) + " q=" + std::to_string(q));
        mass += brute[c] * table.class_size(c);
      }
      t.check(mass == 2 * table.group_order(), "<F,1> = 2 n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
  return t.done("F-formula checks");
}

SuiteResult algebra(const Request&) {
  Tally t;
  {
    const ff::ClassTable table(2, ff::PrimeField(3));
    const ff::Kernel kernel(table);
    const ff::ClassFunction nf = ff::N(table);
    t.check(ff::convolve(kernel, nf, nf) == ff::C_brute(table), "N*N = C on GL_2(F_3)");
  }
  for (int n = 1; n <= 3; ++n)
    for (int q : {3, 5, 7}) {
      const ff::ClassTable table(n, ff::PrimeField(q));
      Integer total = 0;
      bool round_trip = true;
      for (std::size_t c = 0; c < table.size(); ++c) {
        total += table.class_size(c);
        round_trip = round_trip && table.class_of(table.representative(c)) == c;
      }
      t.check(total == table.group_order(), "class equation n=" + std::to_string(n) + " q=" + std::to_string(q));
      t.check(round_trip, "classify round trip n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
  return t.done("finite group identities");
}

SuiteResult oracle(const Request& req) {
  std::vector<std::pair<int, int>> set = req.oracle;
  if (set.empty()) set = {{2, 5}, {2, 13}};
  Tally t;
  bool transposed_failed = false;
  for (auto [n, q] : set) {
    const ff::Oracle o(n, q);
    for (auto [g, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}}) {
      const SurfaceData surf(g, r);
      const std::string at = where(n, g, r) + " q=" + std::to_string(q);
      for (int xi : ff::primitive_roots_2n(n, o.table().field()))
        t.check(ff::compare_with_formula(o, surf, std::nullopt, PairingConvention::matched, xi).equal,
                "count " + at + " xi=" + std::to_string(xi));
      for (int k = 1; k <= r; k += 2)
        t.check(ff::compare_with_formula(o, surf, k).equal, "component " + at + " k=" + std::to_string(k));
      if (!ff::compare_with_formula(o, surf, std::nullopt, PairingConvention::transposed).equal) transposed_failed = true;
    }
  }
  t.check(transposed_failed, "transposed convention matched every count");
  return t.done("oracle comparisons");
}

SuiteResult n1(const Request&) {
  Tally t;
  for (int q : {3, 5, 7, 11}) {
    const ff::Oracle o(1, q);
    for (int g = 0; g <= 3; ++g)
      for (int r = 1; r <= g + 1; ++r) {
        const ff::OracleReport rep = ff::compare_with_formula(o, SurfaceData(g, r));
        const Integer closed = pow_int(2, static_cast<unsigned long>(r - 1)) *
                               pow_int(Integer(q - 1), static_cast<unsigned long>(g + 1));
        t.check(rep.equal && rep.counted == closed, where(1, g, r) + " q=" + std::to_string(q));
      }
  }
  return t.done("rank one counts");
}

const std::map<std::string, std::function<SuiteResult(const Request&)>>& registry() {
  static const std::map<std::string, std::function<SuiteResult(const Request&)>> suites{
      {"closed-form", closed_form}, {"telescope", telescope}, {"genfun", genfun},   {"coefficients", coefficients},
      {"components", components},   {"euler", euler},         {"f-formulas", f_formulas}, {"algebra", algebra},
      {"oracle", oracle},           {"n1", n1}};
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"closed-form", "telescope", "genfun", "coefficients", "components",
          "euler",       "f-formulas", "algebra", "oracle",       "n1"};
}

SuiteResult run_suite(const std::string& name, const Request& request) {
  auto it = registry().find(name);
  if (it == registry().end()) {
    std::string known;
    for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
    throw Error(ErrorCode::ParseError, "unknown suite '" + name + "' (known: " + known + ", all)");
  }
  return it->second(request);
}

}  // namespace epoly::cli
