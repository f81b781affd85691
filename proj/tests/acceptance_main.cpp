#include <iostream>

#include "cfint/acceptance.hpp"

int main() {
  bool ok = true;
  for (int id = 1; id <= 8; ++id) {
    const cfint::CriterionResult r = cfint::run_criterion(id);
    std::cout << cfint::summary_line(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
