#pragma once
// Command-line front end. Exit codes: 0 success, 1 domain error (the error
// category is printed), 2 usage error.
#include <ostream>
#include <string>
#include <vector>

namespace moduli {

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moduli
