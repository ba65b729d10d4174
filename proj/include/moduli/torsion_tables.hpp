#pragma once
// Finitely generated abelian groups as presented sums of cyclic groups, and
// the tabulated abelianizations of mapping class groups of 6-manifolds.
//
// The ko_7 groups below are imported facts, not computed here.
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moduli/exact_series.hpp"

namespace moduli {

class FinAbGroup {
 public:
  /// The trivial group.
  FinAbGroup() = default;
  /// 0 stands for Z, k >= 2 for Z/k; factors equal to 1 are dropped.
  explicit FinAbGroup(std::vector<std::uint64_t> factors);
  static FinAbGroup cyclic(std::uint64_t k) { return FinAbGroup({k}); }
  static FinAbGroup power(std::uint64_t k, unsigned copies);

  /// Sorted ascending, with Z (0) first.
  const std::vector<std::uint64_t>& factors() const noexcept { return factors_; }
  bool is_trivial() const noexcept { return factors_.empty(); }
  bool is_finite() const;
  /// Product of the cyclic orders; nullopt for an infinite group.
  std::optional<Integer> order() const;
  /// Same group rewritten as a sum of Z's and prime-power cyclic groups.
  FinAbGroup primary_decomposition() const;

  bool operator==(const FinAbGroup&) const = default;

 private:
  std::vector<std::uint64_t> factors_;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);
/// Isomorphism test via primary decompositions.
bool isomorphic(const FinAbGroup& a, const FinAbGroup& b);
/// "(Z/2)^2 + Z/3", "Z + Z/4", "0".
std::string to_string(const FinAbGroup& g);

/// pi_1 of the Madsen-Tillmann spectrum MT theta_n for the n-connected
/// cover theta_n of BO, n = 1..7.
FinAbGroup mt_theta_pi1(int n);

struct GammaAbResult {
  std::string example;        // canonical preset name
  FinAbGroup group;           // G^ab + ko_7(BG)
  FinAbGroup g_ab;
  FinAbGroup ko7;
  int hirsch_length = 0;
  std::string citation;
};

/// Presets: "lens" (needs prime p), "quaternion-Q8", "poincare-sphere".
/// When a genus is given it must satisfy g >= 7 + h.
GammaAbResult gamma_ab(std::string_view example, std::optional<std::uint64_t> p = std::nullopt,
                       std::optional<Integer> genus = std::nullopt);

std::vector<std::string> gamma_ab_examples();

}  // namespace moduli
