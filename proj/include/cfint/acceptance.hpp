#pragma once

// End-to-end acceptance cases 1-8, shared by the acceptance test binary and
// the `cfint selftest` subcommand.

#include <string>
#include <vector>

#include "cfint/linalg.hpp"

namespace cfint {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no limit
};

CriterionResult run_criterion(int id, Exec exec = Exec::parallel);
std::vector<CriterionResult> run_acceptance(Exec exec = Exec::parallel);

// "criterion 1 PASS  ..." on one line.
std::string summary_line(const CriterionResult& r);

// Job documents used by the determinism and round-trip checks.
struct NamedJob {
  std::string name;
  std::string text;
};
const std::vector<NamedJob>& acceptance_jobs();

}  // namespace cfint
