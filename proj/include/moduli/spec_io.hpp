#pragma once
// JSON spec files: custom structure presets and d3 kernel specifications.
//
//   preset:  {"fiber_dim": 6, "generators": [{"name": "t", "degree": 2, "parity": "even"}, ...]}
//   kernel:  {"preset": "vd-spinc" | {preset object}, "boundary": {"e": "-200", "t p1": "-100/1"},
//             "involution": true, "max_degree": 8}
//
// A kernel spec may give "d" instead of "boundary"; the values are then the
// characteristic numbers of a degree-d hypersurface of the fibre dimension.
#include <filesystem>
#include <string_view>
#include <variant>

#include "moduli/kappa_rings.hpp"
#include "moduli/serre_kernel.hpp"

namespace moduli {

struct KernelSpec {
  DerivationSpec derivation;
  bool involution = false;
  int max_degree = 0;
};

using SpecFile = std::variant<KernelSpec, StructurePreset>;

/// Upper bound on kappa degrees: MODULI_KAPPA_MAX_DEGREE, default 24.
int kappa_degree_cap();
/// Throws size_limit when max_degree exceeds kappa_degree_cap().
void check_degree_cap(int max_degree);

/// Errors carry parse_error (with line and column for malformed JSON) or the
/// kind raised by the failing invariant, prefixed with the offending field.
SpecFile parse_spec(std::string_view text);
SpecFile load_spec_file(const std::filesystem::path& path);

/// A boundary map alone: {"e": "-200", ...} over the given base.
BoundaryValues parse_boundary_map(std::string_view text, const GeneratorSet& base);

}  // namespace moduli
