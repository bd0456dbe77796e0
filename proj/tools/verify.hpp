#pragma once

#include <string>
#include <vector>

#include "cli.hpp"

namespace epoly::cli {

struct SuiteResult {
  bool passed = true;
  std::string summary;
  std::vector<std::string> failures;
};

/// Suites run by "verify all", in order.
std::vector<std::string> suite_names();

/// Runs one suite; telescope reads g, r and N from the request, the oracle suite reads the (n, q) set.
SuiteResult run_suite(const std::string& name, const Request& request);

}  // namespace epoly::cli
