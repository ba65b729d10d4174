// One line per acceptance criterion; exits non-zero if any fails.
#include <iostream>

#include "moduli/reproduce.hpp"

int main() {
  int failed = 0;
  for (const auto& check : moduli::acceptance_checks()) {
    const moduli::CheckResult r = moduli::run_check(check);
    if (!r.passed) ++failed;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << check.id << "] " << check.name << ": "
              << check.title << " -- " << r.detail << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
