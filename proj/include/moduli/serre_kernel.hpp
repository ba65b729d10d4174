#pragma once

// The two-column spectral sequence collapsed to one derivation.
//
// For a fibration over K(Z,3) the E_2 page is Lambda[iota_3] tensor A with
// A a free kappa-class algebra, and the only differential is iota_3 tensor
// d3 where d3 : A -> A is the degree -2 derivation acting as d/dt on the
// base monomials:
//
//   d3(kappa_{t^m c}) = m kappa_{t^{m-1} c}.
//
// When |t^{m-1} c| equals the fibre dimension the right-hand side is a
// characteristic number, supplied as a boundary value. The cohomology of the
// total space is Ker(d3), and the involution t -> -t acts on kappa_{t^m c}
// by (-1)^m.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moduli/ci_invariants.hpp"
#include "moduli/graded_algebra.hpp"
#include "moduli/kappa_rings.hpp"
#include "moduli/linear_algebra.hpp"

namespace moduli {

using BoundaryValues = std::map<Monomial, Rational>;

class DerivationSpec {
 public:
  struct GeneratorImage {
    enum class Kind { zero, scalar, generator, missing };
    Kind kind = Kind::zero;
    Rational coefficient;         // m, or m times the boundary value
    std::size_t target = 0;       // kappa generator index for Kind::generator
    Monomial missing;             // base monomial lacking a boundary value
  };

  /// Throws invalid_argument if t is not an even degree-2 base generator or a
  /// boundary key does not have the fibre dimension as degree.
  DerivationSpec(KappaAlgebra algebra, const std::string& t_symbol, BoundaryValues boundary);

  const KappaAlgebra& algebra() const noexcept { return algebra_; }
  const GeneratorSetPtr& generators() const noexcept { return algebra_.generators; }
  std::size_t t_index() const noexcept { return t_index_; }
  int fiber_dim() const noexcept { return algebra_.fiber_dim; }
  int max_degree() const noexcept { return algebra_.max_degree; }
  const BoundaryValues& boundary() const noexcept { return boundary_; }

  const GeneratorImage& image(std::size_t kappa_index) const { return images_.at(kappa_index); }
  /// Exponent of t in the base monomial of a kappa generator.
  std::uint32_t t_exponent(std::size_t kappa_index) const;
  /// +1 or -1: the involution t -> -t on a monomial in kappa classes.
  int involution_sign(const Monomial& m) const;
  bool has_nonzero_boundary() const;

  /// Degree-2n base monomials from which d3 reads a boundary value.
  std::vector<Monomial> required_boundary_monomials() const;

 private:
  KappaAlgebra algebra_;
  std::size_t t_index_;
  BoundaryValues boundary_;
  std::vector<GeneratorImage> images_;
};

/// Boundary values <[V], c> for every degree-2n monomial c in the base,
/// reading t as the hyperplane class, p_i and e as tangential classes.
BoundaryValues boundary_from_complete_intersection(const GeneratorSet& base, int fiber_dim,
                                                   const CompleteIntersection& ci);

/// vd-spinc with the characteristic numbers of the degree-d hypersurface in CP^4.
DerivationSpec vd_derivation_spec(int d, int max_degree);
/// vd-spinc with e -> 4 - 2g, t p1 -> 0, t^3 -> 0 (the M_g = M # g(S^3 x S^3) example).
DerivationSpec mg_derivation_spec(const Integer& genus, int max_degree);

/// Throws missing_boundary_value when a required scalar is absent.
GradedPolynomial apply_d3(const DerivationSpec& spec, const GradedPolynomial& p);
GradedPolynomial apply_involution(const DerivationSpec& spec, const GradedPolynomial& p);

struct D3Matrix {
  DegreeBasis source;  // degree k
  DegreeBasis target;  // degree k - 2
  SparseMatrix matrix; // target.size() x source.size()
};

D3Matrix d3_matrix(const DerivationSpec& spec, int degree);

struct KernelReport {
  int degree = 0;
  std::size_t ambient_dim = 0;
  std::size_t target_dim = 0;
  std::size_t kernel_dim = 0;
  std::size_t image_dim = 0;
  std::vector<GradedPolynomial> kernel_basis;
  std::optional<std::size_t> invariant_dim;
  std::optional<std::vector<GradedPolynomial>> invariant_basis;
};

KernelReport kernel_report(const DerivationSpec& spec, int degree, bool involution);

struct SurjectivityEntry {
  int degree = 0;
  std::size_t rank = 0;
  std::size_t target_dim = 0;
  bool surjective = false;
};

/// Degrees 0..max_degree, computed concurrently; the result does not depend
/// on scheduling.
std::vector<SurjectivityEntry> surjectivity_check(const DerivationSpec& spec, int max_degree);

/// True if p lies in the span of the given homogeneous polynomials.
bool in_span(const std::vector<GradedPolynomial>& basis, const GradedPolynomial& p);

struct RelationCheck {
  bool relation_holds = false;          // (ab)^2 == a^2 b^2 in degree 16
  bool factors_in_kernel = false;
  bool factors_anti_invariant = false;
  bool products_invariant = false;
  bool products_in_invariant_kernel = false;  // ab, a^2, b^2 in degree 8

  bool all() const {
    return relation_holds && factors_in_kernel && factors_anti_invariant && products_invariant &&
           products_in_invariant_kernel;
  }
};

/// a = k[t e] k[p2] - chi k[t p2], b = k[t e] k[p1^2] - chi k[t p1^2] with
/// chi the boundary value of e. Needs a vd-spinc algebra of degree >= 8.
RelationCheck sum_of_squares_relation_check(const DerivationSpec& spec);

}  // namespace moduli
