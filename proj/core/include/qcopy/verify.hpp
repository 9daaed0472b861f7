#pragma once

#include <string>
#include <vector>

// Self-verification suite: every module invariant evaluated over an f
// grid, reported one line per invariant. Backs the `qcopy verify`
// subcommand and the acceptance tests.

namespace qcopy {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // worst residual and where it occurred
};

// Runs all checks over a uniform f grid with the given number of steps
// (>= 2). Deterministic: property-style checks use fixed seeds.
std::vector<CheckResult> run_verify(int grid_steps);

// Renders one "PASS name  detail" / "FAIL name  detail" line per check.
std::string format_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qcopy
