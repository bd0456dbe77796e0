#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epoly/epoly.hpp"

namespace epoly::cli {

enum class Format { text, json, csv, latex };

Format parse_format(const std::string& text);

struct Request {
  std::string command;
  /// verify only.
  std::string suite = "all";
  int n_min = 1;
  int n_max = 1;
  int g = 2;
  int r = 1;
  /// Set when g or r came from the command line.
  bool surface_given = false;
  std::optional<int> k;
  PairingConvention convention = PairingConvention::matched;
  int N = 6;
  Format format = Format::text;
  bool xy = false;
  /// (n, q) pairs for the oracle suites.
  std::vector<std::pair<int, int>> oracle;
};

struct Outcome {
  int status = 0;
  std::string document;
};

/// Accepts "3", "1..4" and "1-4".
std::pair<int, int> parse_range(const std::string& text);
/// Accepts "2:5,2:13".
std::vector<std::pair<int, int>> parse_oracle_set(const std::string& text);

/// Polynomial in q, or in x and y when xy is set.
std::string render(const HalfPoly& p, Format format, bool xy);
std::string render(const RationalFunction& f, Format format, bool xy);

/// Executes one request. Domain errors propagate as epoly::Error.
Outcome run(const Request& request);

}  // namespace epoly::cli
