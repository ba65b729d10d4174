#include "moduli/error.hpp"

namespace moduli {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::mismatched_truncation: return "mismatched_truncation";
    case ErrorKind::non_invertible: return "non_invertible";
    case ErrorKind::inconsistent_invariants: return "inconsistent_invariants";
    case ErrorKind::missing_boundary_value: return "missing_boundary_value";
    case ErrorKind::generator_set_mismatch: return "generator_set_mismatch";
    case ErrorKind::unknown_preset: return "unknown_preset";
    case ErrorKind::parse_error: return "parse_error";
    case ErrorKind::size_limit: return "size_limit";
  }
  return "unknown";
}

}  // namespace moduli
