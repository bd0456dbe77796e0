#include "cli.hpp"

#include <sstream>

#include <json.hpp>

#include "epoly/error.hpp"
#include "epoly/exchange.hpp"
#include "verify.hpp"

namespace epoly::cli {

using nlohmann::ordered_json;

Format parse_format(const std::string& text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "latex") return Format::latex;
  throw Error(ErrorCode::ParseError, "unknown format '" + text + "' (use text, json, csv or latex)");
}

std::pair<int, int> parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw Error(ErrorCode::ParseError, "bad n or n-range '" + text + "'");
    return v;
  };
  std::size_t sep = text.find("..");
  std::size_t skip = 2;
  if (sep == std::string::npos) {
    sep = text.find('-', 1);
    skip = 1;
  }
  if (sep == std::string::npos) {
    const int n = number(text);
    return {n, n};
  }
  const int lo = number(text.substr(0, sep));
  const int hi = number(text.substr(sep + skip));
  if (lo < 1 || hi < lo) throw Error(ErrorCode::ParseError, "empty n-range '" + text + "'");
  return {lo, hi};
}

std::vector<std::pair<int, int>> parse_oracle_set(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "oracle entries look like n:q, got '" + item + "'");
    try {
      out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "oracle entries look like n:q, got '" + item + "'");
    }
  }
  return out;
}

namespace {

std::string rational_text(const Rational& c, Format format) {
  if (format == Format::latex && !is_integer(c))
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
  return to_string(c);
}

// q^(e/2) in the requested style.
std::string power_text(int e, Format format, bool xy) {
  std::string exp;
  if (e % 2 == 0) exp = std::to_string(e / 2);
  else if (format == Format::latex) exp = "\\frac{" + std::to_string(e) + "}{2}";
  else exp = "(" + std::to_string(e) + "/2)";
  const bool unit = e == 2;
  auto var = [&](const std::string& v) {
    if (unit) return v;
    if (format == Format::latex) return v + "^{" + exp + "}";
    return v + "^" + exp;
  };
  if (!xy) return var("q");
  return var("x") + (format == Format::latex ? " " : "*") + var("y");
}

}  // namespace

std::string render(const HalfPoly& p, Format format, bool xy) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (e == 0) out += rational_text(mag, format);
    else if (mag == 1) out += power_text(e, format, xy);
    else out += rational_text(mag, format) + (format == Format::latex ? " " : "*") + power_text(e, format, xy);
  }
  return out;
}

std::string render(const RationalFunction& f, Format format, bool xy) {
  if (f.is_laurent()) return render(f.num(), format, xy);
  if (format == Format::latex) return "\\frac{" + render(f.num(), format, xy) + "}{" + render(f.den(), format, xy) + "}";
  return "(" + render(f.num(), format, xy) + ")/(" + render(f.den(), format, xy) + ")";
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

ordered_json header(int n, const Request& req, std::optional<int> k) {
  ordered_json j;
  j["n"] = n;
  j["g"] = req.g;
  j["r"] = req.r;
  j["k"] = k ? ordered_json(*k) : ordered_json(nullptr);
  j["convention"] = to_string(req.convention);
  return j;
}

ordered_json poly_json(const RationalFunction& f) {
  return ordered_json::parse(f.is_laurent() ? to_exchange(f.num()) : to_exchange(f));
}

int require_k(const Request& req) {
  if (!req.k) throw Error(ErrorCode::ParseError, req.command + " needs --k (an odd component index 1 <= k <= r)");
  return *req.k;
}

Outcome run_polys(const Request& req) {
  const SurfaceData surf(req.g, req.r);
  const bool component = req.command == "component";
  const std::optional<int> k = component ? std::optional<int>(require_k(req)) : std::nullopt;
  std::ostringstream out;
  if (req.format == Format::csv) out << "n,g,r,k,convention,poly\n";
  for (int n = req.n_min; n <= req.n_max; ++n) {
    const RationalFunction e = component ? e_poly_component_rational(n, surf, *k, req.convention)
                                         : e_poly_rational(n, surf, req.convention);
    const std::string name = "E_" + std::to_string(n) + (component ? "^" + std::to_string(*k) : "");
    switch (req.format) {
      case Format::text: out << name << "(" << (req.xy ? "x,y" : "q") << ") = " << render(e, req.format, req.xy) << "\n"; break;
      case Format::latex:
        out << "E_{" << n << "}" << (component ? "^{" + std::to_string(*k) + "}" : "") << "(" << (req.xy ? "x,y" : "q")
            << ") = " << render(e, req.format, req.xy) << "\n";
        break;
      case Format::json: {
        ordered_json j = header(n, req, k);
        j["poly"] = poly_json(e);
        out << j.dump() << "\n";
        break;
      }
      case Format::csv:
        out << n << "," << req.g << "," << req.r << "," << (k ? std::to_string(*k) : "") << ","
            << to_string(req.convention) << "," << csv_quote(render(e, Format::text, req.xy)) << "\n";
        break;
    }
  }
  return {0, out.str()};
}

Outcome run_euler(const Request& req) {
  const SurfaceData surf(req.g, req.r);
  const int k = require_k(req);
  std::ostringstream out;
  if (req.format == Format::csv) out << "n,g,r,k,convention,euler\n";
  for (int n = req.n_min; n <= req.n_max; ++n) {
    const Rational chi = euler_char_component(n, surf, k, req.convention);
    switch (req.format) {
      case Format::text: out << to_string(chi) << "\n"; break;
      case Format::latex: out << "\\chi_{" << n << "}^{" << k << "} = " << rational_text(chi, Format::latex) << "\n"; break;
      case Format::json: {
        ordered_json j = header(n, req, k);
        j["euler"] = to_string(chi);
        out << j.dump() << "\n";
        break;
      }
      case Format::csv:
        out << n << "," << req.g << "," << req.r << "," << k << "," << to_string(req.convention) << "," << to_string(chi)
            << "\n";
        break;
    }
  }
  return {0, out.str()};
}

Outcome run_genfun(const Request& req) {
  const SurfaceData surf(req.g, req.r);
  const GenFunctionResult res = gen_function_sides(req.N, surf, req.convention);
  std::ostringstream out;
  if (req.format == Format::csv) out << "n,g,r,convention,lhs,rhs,equal\n";
  for (int n = 1; n <= req.N; ++n) {
    const bool eq = cross_equal(res.lhs[n], res.rhs[n]);
    switch (req.format) {
      case Format::text:
        out << "V_" << n << " = " << render(res.lhs[n], req.format, req.xy) << (eq ? "  [match]" : "  [MISMATCH]") << "\n";
        break;
      case Format::latex: out << "V_{" << n << "} = " << render(res.lhs[n], req.format, req.xy) << "\n"; break;
      case Format::json: {
        ordered_json j = header(n, req, std::nullopt);
        j.erase("k");
        j["lhs"] = poly_json(res.lhs[n]);
        j["rhs"] = poly_json(res.rhs[n]);
        j["equal"] = eq;
        out << j.dump() << "\n";
        break;
      }
      case Format::csv:
        out << n << "," << req.g << "," << req.r << "," << to_string(req.convention) << ","
            << csv_quote(render(res.lhs[n], Format::text, req.xy)) << ","
            << csv_quote(render(res.rhs[n], Format::text, req.xy)) << "," << (eq ? "true" : "false") << "\n";
        break;
    }
  }
  if (req.format == Format::text) out << "generating function identity: " << (res.equal ? "holds" : "FAILS") << "\n";
  return {res.equal ? 0 : 1, out.str()};
}

Outcome run_verify(const Request& req) {
  std::vector<std::string> names;
  if (req.suite == "all") names = suite_names();
  else names.push_back(req.suite);
  std::ostringstream out;
  bool all = true;
  if (req.format == Format::csv) out << "suite,status,detail\n";
  for (const auto& name : names) {
    const SuiteResult res = run_suite(name, req);
    all = all && res.passed;
    switch (req.format) {
      case Format::text:
      case Format::latex:
        out << (res.passed ? "PASS " : "FAIL ") << name << ": " << res.summary << "\n";
        for (const auto& d : res.failures) out << "  " << d << "\n";
        break;
      case Format::json: {
        ordered_json j;
        j["suite"] = name;
        j["passed"] = res.passed;
        j["summary"] = res.summary;
        j["failures"] = res.failures;
        out << j.dump() << "\n";
        break;
      }
      case Format::csv:
        out << name << "," << (res.passed ? "pass" : "fail") << "," << csv_quote(res.summary) << "\n";
        break;
    }
  }
  if (req.format == Format::text || req.format == Format::latex) out << "verify: " << (all ? "PASS" : "FAIL") << "\n";
  return {all ? 0 : 1, out.str()};
}

}  // namespace

Outcome run(const Request& req) {
  if (req.command == "epoly" || req.command == "component") return run_polys(req);
  if (req.command == "euler") return run_euler(req);
  if (req.command == "genfun") return run_genfun(req);
  if (req.command == "verify") return run_verify(req);
  throw Error(ErrorCode::ParseError, "unknown command '" + req.command + "'");
}

}  // namespace epoly::cli
