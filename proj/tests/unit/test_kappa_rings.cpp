#include "doctest.h"
#include "moduli/error.hpp"
#include "moduli/kappa_rings.hpp"
#include "oracles.hpp"

using namespace moduli;

namespace {

std::vector<std::string> names_of(const GeneratorSet& g) {
  std::vector<std::string> out;
  for (const Generator& x : g) out.push_back(x.name + ":" + std::to_string(x.degree));
  return out;
}

std::vector<std::string> kappa_names(const KappaAlgebra& k) {
  std::vector<std::string> out;
  for (const Generator& x : *k.generators) out.push_back(x.name);
  return out;
}

// Brute force: number of exponent vectors with the given weighted sum.
std::uint64_t partitions(const std::vector<int>& parts, std::size_t i, int target) {
  if (i == parts.size()) return target == 0;
  std::uint64_t n = 0;
  for (int used = 0; used <= target; used += parts[i]) n += partitions(parts, i + 1, target - used);
  return n;
}

}  // namespace

TEST_CASE("BSO(2n)<n> generators") {
  CHECK(names_of(bso_cover_generators(3)) == std::vector<std::string>{"p1:4", "e:6", "p2:8"});
  CHECK(names_of(bso_cover_generators(4)) == std::vector<std::string>{"p2:8", "e:8", "p3:12"});
  CHECK(names_of(bso_cover_generators(1)) == std::vector<std::string>{"e:2"});
  CHECK(names_of(bso_generators(4)) == std::vector<std::string>{"p1:4", "p2:8", "e:8", "p3:12"});
  CHECK_THROWS_AS(bso_cover_generators(0), Error);
}

TEST_CASE("presets") {
  CHECK(preset_by_name("vd-spinc").fiber_dim == 6);
  CHECK(preset_by_name("bso-cover(5)").fiber_dim == 10);
  CHECK(preset_by_name("bso-cover:5").name == "bso-cover(5)");
  try {
    preset_by_name("cp-infinity");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_preset);
  }
  CHECK(bso_cover_preset(2).warnings().size() == 1);
  CHECK(bso_cover_preset(3).warnings().empty());
  StructurePreset twisted = bso_cover_preset(3);
  twisted.oriented = false;
  CHECK_THROWS_AS(twisted.validate(), Error);
}

TEST_CASE("kappa generators") {
  CHECK(kappa_names(kappa_generator_set(bso_cover_preset(3), 2)) ==
        std::vector<std::string>{"k[p2]", "k[p1^2]"});
  CHECK(kappa_names(kappa_generator_set(vd_spinc_preset(), 2)) ==
        std::vector<std::string>{"k[p2]", "k[p1^2]", "k[t e]", "k[t^2 p1]", "k[t^4]"});
  CHECK(kappa_names(kappa_generator_set(bso_cover_preset(3), 4)) ==
        std::vector<std::string>{"k[p2]", "k[p1^2]", "k[p1 e]"});
  CHECK_THROWS_AS(kappa_generator_set(bso_cover_preset(3), 0), Error);
}

TEST_CASE("kappa generator counts are partition counts") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<int> parts{2 * n};
    for (int i = (n + 4) / 4; i <= n - 1; ++i) parts.push_back(4 * i);
    const KappaAlgebra k = kappa_generator_set(bso_cover_preset(n), 20);
    std::vector<std::uint64_t> count(21, 0);
    for (const Generator& g : *k.generators) {
      CHECK(g.degree >= 1);
      ++count[g.degree];
    }
    for (int d = 1; d <= 20; ++d) CHECK(count[d] == partitions(parts, 0, d + 2 * n));
  }
}

TEST_CASE("closed W_g generators") {
  for (int D : {2, 6, 12})
    CHECK(kappa_names(wg_closed_generator_set(3, D)) ==
          kappa_names(kappa_generator_set(bso_cover_preset(3), D)));
  const auto n4 = kappa_names(wg_closed_generator_set(4, 4));
  CHECK(std::find(n4.begin(), n4.end(), "k[p1 e]") != n4.end());
  const KappaAlgebra n5 = wg_closed_generator_set(5, 4);
  const auto idx = n5.generators->find("k[p1 e]");
  REQUIRE(idx);
  CHECK((*n5.generators)[*idx].degree == 4);
  CHECK_THROWS_AS(wg_closed_generator_set(2, 4), Error);
}

TEST_CASE("stable dimensions") {
  const auto dims = stable_cohomology_dims(bso_cover_preset(3), 9, true, 6);
  CHECK(dims[0].dimension == 1);
  CHECK(dims[2].dimension == 2);
  CHECK(dims[4].dimension == 4);
  CHECK(dims[3].in_stable_range);
  CHECK(!dims[4].in_stable_range);
}

TEST_CASE("Leray-Hirsch dimensions") {
  const auto lh3 = leray_hirsch_dims(3, 16);
  const auto stable = stable_cohomology_dims(bso_cover_preset(3), 0, false, 16);
  for (int k = 0; k <= 16; ++k) CHECK(lh3[k] == stable[k].dimension);
  for (int n = 3; n <= 6; ++n)
    CHECK(leray_hirsch_dims(n, 16) == hilbert_dims(*wg_closed_generator_set(n, 16).generators, 16));
  // n = 4: the kappa algebra tensored with Q[p1], by an explicit series product.
  const KappaAlgebra k4 = kappa_generator_set(bso_cover_preset(4), 8);
  std::vector<int> even{4};
  for (const Generator& g : *k4.generators) even.push_back(g.degree);
  CHECK(leray_hirsch_dims(4, 8) == oracle::free_algebra_series(even, {}, 8));
  CHECK(leray_hirsch_dims(4, 8)[0] == 1);
}

TEST_CASE("rewriting kappa classes through the W_g generators") {
  const KappaAlgebra wg = wg_closed_generator_set(4, 12);
  const GeneratorSet& base = *wg.base;
  // chi(W_g) = 2 + 2g for n = 4.
  const Integer g = 3;
  const auto ep1 = GradedPolynomial::generator(wg.generators, "k[p1 e]");
  CHECK(kappa_in_wg_generators(wg, 4, g, parse_monomial(base, "e p1")) == ep1);
  CHECK(kappa_in_wg_generators(wg, 4, g, parse_monomial(base, "e")) ==
        GradedPolynomial::constant(wg.generators, 8));
  CHECK(kappa_in_wg_generators(wg, 4, g, parse_monomial(base, "p1")).is_zero());
  CHECK(kappa_in_wg_generators(wg, 4, g, parse_monomial(base, "p1 p2 e")) ==
        ep1 * GradedPolynomial::generator(wg.generators, "k[p2 e]").scaled(ratio(1, 8)));
  CHECK(kappa_in_wg_generators(wg, 4, g, parse_monomial(base, "p1^2 e")) ==
        (ep1 * ep1).scaled(ratio(1, 8)));
  CHECK_THROWS_AS(kappa_in_wg_generators(wg_closed_generator_set(5, 12), 5, 1,
                                         parse_monomial(*wg_closed_generator_set(5, 12).base, "e p1")),
                  Error);
}
