#pragma once
// The acceptance checks, each comparing the library against an independent
// route to the same numbers. Shared by `moduli reproduce` and the acceptance
// test binary.
#include <functional>
#include <string>
#include <vector>

namespace moduli {

struct CheckResult {
  bool passed = false;
  std::string detail;
};

struct AcceptanceCheck {
  int id = 0;
  std::string name;
  std::string title;
  std::function<CheckResult()> run;
};

const std::vector<AcceptanceCheck>& acceptance_checks();
/// Throws invalid_argument for an unknown name.
const AcceptanceCheck& acceptance_check(const std::string& name);
/// Runs one check; a thrown exception counts as a failure with its message.
CheckResult run_check(const AcceptanceCheck& check);

}  // namespace moduli
