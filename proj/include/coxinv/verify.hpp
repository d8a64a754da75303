// The verification suites: one named check per group of claims, run in
// name order.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxinv/group.hpp"

namespace coxinv {

struct VerifyOptions {
  std::string suite = "core";     // "core" or "heavy"
  std::string inject_fault;       // "" or "root-table"
  std::size_t limit = kDefaultLimit;
  std::vector<std::string> only;  // run just these checks when non-empty
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Names of the checks of a suite, in run order. Throws std::invalid_argument.
std::vector<std::string> check_names(const std::string& suite);
std::vector<CheckResult> run_verify(const VerifyOptions& opts);
/// One line per check and a closing summary line.
std::string verify_summary(const std::vector<CheckResult>& results, bool timing);

}  // namespace coxinv
