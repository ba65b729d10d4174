#pragma once

// Genus estimates and the degree ranges in which the stable cohomology applies.

#include <optional>
#include <string>
#include <vector>

#include "moduli/exact_series.hpp"

namespace moduli {

class CompleteIntersection;

struct ManifoldInvariants {
  int half_dim = 0;                 // n, with dim W = 2n
  Integer euler_char;
  std::vector<Integer> betti_below; // b_0 .. b_{n-1}
  Integer signature;                // zero when n is odd
  int e_generators = 0;             // minimal number of generators of H_n(B; Z)
  int hirsch_length = 0;
  bool spherical = false;
  /// The n-connectivity of W -> B cannot be checked here; callers assert it.
  bool n_connected_asserted = false;

  /// Throws invalid_argument when an invariant from the type contract fails.
  void validate() const;
};

/// Invariants of a complete intersection: Lefschetz Betti numbers below the
/// middle, with e = 0 and h = 0.
ManifoldInvariants manifold_invariants(const CompleteIntersection& ci, bool spherical = false);

/// (-1)^n (chi/2 - sum_{i<n} (-1)^i b_i) - |sigma|/2. Throws
/// inconsistent_invariants if that is not an integer.
Integer algebraic_genus(const ManifoldInvariants& inv);

struct GenusInterval {
  Integer lower;
  Integer upper;
  int slack = 0;  // upper - lower
};

/// [g^a - c, g^a] with c = e when n is even or n in {3, 7}, else c = 1 + e.
/// Requires n > 2.
GenusInterval genus_interval(const ManifoldInvariants& inv);

/// Genus of a simply-connected 6-manifold from its third Betti number.
Integer dim6_exact_genus(const Integer& b3);

struct StableRange {
  Rational bound;     // isomorphism in cohomological degrees <= bound
  Integer floor;      // largest admissible integer degree (may be negative)
  std::string rule;
};

/// Without a fundamental group (hirsch == 0): (g-3)/2 when spherical and
/// (g-4)/3 otherwise. With Hirsch length h > 0: (g-h-5)/2 resp. (g-h-6)/3.
StableRange stable_range(const Integer& genus, bool spherical, int hirsch);

Integer floor_of(const Rational& q);

}  // namespace moduli
