#pragma once

// Generator sets of the free kappa-class algebras: one generator kappa_c of
// degree |c| - 2n for every basis monomial c of H^*(B; Q) above the fibre
// dimension 2n.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moduli/exact_series.hpp"
#include "moduli/graded_algebra.hpp"

namespace moduli {

struct StructurePreset {
  std::string name;
  int fiber_dim = 0;  // 2n
  GeneratorSetPtr base;
  bool oriented = true;

  int half_dim() const noexcept { return fiber_dim / 2; }
  /// Throws invalid_argument for an odd or non-positive fibre dimension, an
  /// empty base, or a non-orientable structure (the twisted coefficients are
  /// not modelled).
  void validate() const;
  /// Non-fatal remarks, e.g. fibre dimension below 6.
  std::vector<std::string> warnings() const;
};

/// e (degree 2n) and p_i (degree 4i) for ceil((n+1)/4) <= i <= n-1, by degree.
GeneratorSet bso_cover_generators(int n);
/// e and all of p_1 .. p_{n-1}.
GeneratorSet bso_generators(int n);

StructurePreset bso_cover_preset(int n);
/// Q[t, p1, e, p2] with fibre dimension 6.
StructurePreset vd_spinc_preset();
/// "vd-spinc", "bso-cover(n)" or "bso-cover:n".
StructurePreset preset_by_name(std::string_view name);

struct KappaAlgebra {
  GeneratorSetPtr base;
  GeneratorSetPtr generators;           // the kappa classes
  std::vector<Monomial> base_monomials; // c for generator i
  int fiber_dim = 0;
  int max_degree = 0;

  std::optional<std::size_t> find(const Monomial& c) const;

 private:
  friend KappaAlgebra make_kappa_algebra(GeneratorSetPtr, std::vector<Monomial>, int, int);
  std::map<Monomial, std::size_t> by_base_;
};

/// "k[" + monomial + "]"
std::string kappa_name(const GeneratorSet& base, const Monomial& c);

/// Generators ordered by degree; within a degree by increasing power of the
/// earlier base generators (so k[p2] precedes k[t^4] over Q[t, p1, e, p2]).
KappaAlgebra make_kappa_algebra(GeneratorSetPtr base, std::vector<Monomial> monomials,
                                int fiber_dim, int max_degree);

/// kappa_c for 2n < |c| <= 2n + max_kappa_degree.
KappaAlgebra kappa_generator_set(const StructurePreset& preset, int max_kappa_degree);

/// Closed manifolds W_g: kappa_c for c in the monomials of bso_cover(n) with
/// |c| > 2n, together with kappa_{e p_i} for i <= floor(n/4). The base is the
/// full Q[e, p_1..p_{n-1}].
KappaAlgebra wg_closed_generator_set(int n, int max_kappa_degree);

struct StableDegree {
  int degree = 0;
  std::uint64_t dimension = 0;
  bool in_stable_range = false;
};

std::vector<StableDegree> stable_cohomology_dims(const StructurePreset& preset,
                                                 const Integer& genus, bool spherical,
                                                 int max_degree);

/// Dimensions of Q[kappa_c | c in B] tensor Q[p_1..p_{floor(n/4)}].
std::vector<std::uint64_t> leray_hirsch_dims(int n, int max_degree);

/// Rewrites kappa_c for an arbitrary monomial c in e, p_1..p_{n-1} through
/// the W_g generators: each p_i with i <= floor(n/4) becomes kappa_{e p_i}/chi
/// with chi = 2 + (-1)^n 2g. Throws invalid_argument when chi = 0.
GradedPolynomial kappa_in_wg_generators(const KappaAlgebra& wg, int n, const Integer& genus,
                                        const Monomial& c);

}  // namespace moduli
