#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moduli {

enum class ErrorKind {
  invalid_argument,
  mismatched_truncation,
  non_invertible,
  inconsistent_invariants,
  missing_boundary_value,
  generator_set_mismatch,
  unknown_preset,
  parse_error,
  size_limit,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module. The kind is what the CLI reports as
/// the error category.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace moduli
