#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"
#include "epoly/error.hpp"

namespace {

struct Options {
  std::string n = "1";
  int g = 2;
  int r = 1;
  std::optional<int> k;
  std::string convention = "matched";
  int N = 6;
  std::string format = "text";
  bool xy = false;
  std::string oracle;
  std::string suite = "all";
};

void add_common(CLI::App* sub, Options& o, bool with_n) {
  if (with_n) sub->add_option("--n", o.n, "rank n or a range such as 1..4")->capture_default_str();
  sub->add_option("--g", o.g, "genus")->capture_default_str();
  sub->add_option("--r", o.r, "number of fixed circles, 1 <= r <= g + 1")->capture_default_str();
  sub->add_option("--convention", o.convention, "matched or transposed")->capture_default_str();
  sub->add_option("--format", o.format, "text, json, csv or latex")->capture_default_str();
  sub->add_flag("--xy", o.xy, "render in x and y with q = xy");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"E-polynomials of character varieties of real curves"};
  app.require_subcommand(1);
  Options o;

  std::map<std::string, CLI::App*> subs;
  subs["epoly"] = app.add_subcommand("epoly", "E_n(q)");
  subs["component"] = app.add_subcommand("component", "E_n^k(q) for one path component");
  subs["euler"] = app.add_subcommand("euler", "Euler characteristic of a component modulo the torus");
  subs["genfun"] = app.add_subcommand("genfun", "both sides of the generating function identity");
  subs["verify"] = app.add_subcommand("verify", "run a verification suite");

  for (auto& [name, sub] : subs) add_common(sub, o, name != "genfun" && name != "verify");
  for (const char* name : {"component", "euler"}) subs[name]->add_option("--k", o.k, "odd component index k <= r");
  subs["genfun"]->add_option("--N", o.N, "truncation order")->capture_default_str();
  subs["verify"]->add_option("suite", o.suite, "suite name or all")->capture_default_str();
  subs["verify"]->add_option("--N", o.N, "truncation order for telescope")->capture_default_str();
  subs["verify"]->add_option("--oracle", o.oracle, "oracle set as n:q pairs, e.g. 2:5,2:13");

  CLI11_PARSE(app, argc, argv);

  try {
    epoly::cli::Request req;
    for (auto& [name, sub] : subs)
      if (sub->parsed()) {
        req.command = name;
        req.surface_given = sub->count("--g") > 0 || sub->count("--r") > 0;
      }
    std::tie(req.n_min, req.n_max) = epoly::cli::parse_range(o.n);
    req.g = o.g;
    req.r = o.r;
    req.k = o.k;
    req.convention = epoly::parse_convention(o.convention);
    req.N = o.N;
    req.format = epoly::cli::parse_format(o.format);
    req.xy = o.xy;
    req.suite = o.suite;
    if (!o.oracle.empty()) req.oracle = epoly::cli::parse_oracle_set(o.oracle);
    const epoly::cli::Outcome out = epoly::cli::run(req);
    std::cout << out.document;
    return out.status;
  } catch (const epoly::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
