#pragma once

#include <string>
#include <vector>

namespace sheaflab::acceptance {

struct CriterionResult {
  std::string id;
  std::string summary;
  bool pass = false;
  std::string detail;
};

// Runs the full identity-verification suite (A1-A10) on deterministic
// seeds. Every tolerance is fixed here, in code.
std::vector<CriterionResult> run_suite();

bool all_passed(const std::vector<CriterionResult>& results);

// PASS/FAIL table, one line per criterion.
std::string format_table(const std::vector<CriterionResult>& results);

}  // namespace sheaflab::acceptance
