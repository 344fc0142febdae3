#pragma once

// Self-check suite run by `atomwall check`: limiting forms, structural
// identities, quadrature cross-checks and the published error figures.

#include <string>
#include <vector>

namespace atomwall::checks {

struct CheckOptions {
  // Relative perturbation applied to H0 (and hence vg) inside the suite. Only
  // for exercising the suite's sensitivity; 0 in normal use.
  double h0_perturbation = 0.0;
};

struct CheckResult {
  std::string name;
  double achieved = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckResult> results;
  double seconds = 0.0;
  bool all_passed() const;
};

CheckReport run_checks(const CheckOptions& options = {});

// One line per check: "[PASS] name  achieved=... tol=...".
std::string format_report(const CheckReport& report);

}  // namespace atomwall::checks
