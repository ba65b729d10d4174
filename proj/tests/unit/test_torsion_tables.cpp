#include "doctest.h"
#include "moduli/error.hpp"
#include "moduli/torsion_tables.hpp"

using namespace moduli;

TEST_CASE("canonical form") {
  CHECK(FinAbGroup({4, 1, 2}).factors() == std::vector<std::uint64_t>{2, 4});
  CHECK(FinAbGroup({1, 1}).is_trivial());
  CHECK(to_string(FinAbGroup()) == "0");
  CHECK(to_string(FinAbGroup({0, 0, 3})) == "Z^2 + Z/3");
  CHECK(!FinAbGroup({0}).order());
  CHECK(*FinAbGroup({2, 4, 64}).order() == 512);
}

TEST_CASE("direct sums") {
  CHECK(direct_sum(FinAbGroup::cyclic(2), FinAbGroup()) == FinAbGroup::cyclic(2));
  CHECK(direct_sum(FinAbGroup::cyclic(2), FinAbGroup::cyclic(4)).factors() == std::vector<std::uint64_t>{2, 4});
  CHECK(direct_sum(FinAbGroup({0}), FinAbGroup::cyclic(3)).factors() == std::vector<std::uint64_t>{0, 3});
  const FinAbGroup a({2, 9}), b({0, 4}), c({5, 5});
  CHECK(direct_sum(a, b) == direct_sum(b, a));
  CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
}

TEST_CASE("primary decomposition identifies presentations") {
  CHECK(FinAbGroup::cyclic(6).primary_decomposition() == FinAbGroup({2, 3}));
  CHECK(isomorphic(FinAbGroup({6}), FinAbGroup({2, 3})));
  CHECK(!isomorphic(FinAbGroup({4}), FinAbGroup({2, 2})));
  CHECK(FinAbGroup::cyclic(6) != FinAbGroup({2, 3}));
  CHECK(FinAbGroup({360, 0}).primary_decomposition() == FinAbGroup({0, 8, 9, 5}));
}

TEST_CASE("pi_1 of MT theta_n") {
  const std::vector<std::string> row{"0", "(Z/2)^2", "0", "(Z/2)^4", "Z/4", "(Z/2)^2 + Z/3", "Z/2"};
  for (int n = 1; n <= 7; ++n) CHECK(to_string(mt_theta_pi1(n)) == row[n - 1]);
  CHECK(mt_theta_pi1(3).is_trivial());
  CHECK(mt_theta_pi1(5) == FinAbGroup::cyclic(4));
  CHECK_THROWS_AS(mt_theta_pi1(0), Error);
  CHECK_THROWS_AS(mt_theta_pi1(8), Error);
}

TEST_CASE("abelianized mapping class groups") {
  CHECK(to_string(gamma_ab("lens", 2).group) == "Z/2 + Z/4");
  CHECK(to_string(gamma_ab("lens", 3).group) == "Z/3 + Z/9");
  for (std::uint64_t p : {5, 7, 11, 13, 97}) CHECK(gamma_ab("lens", p).group == FinAbGroup::power(p, 3));
  CHECK(to_string(gamma_ab("quaternion-Q8").group) == "(Z/2)^2 + (Z/4)^2 + Z/64");
  CHECK(to_string(gamma_ab("poincare-sphere").group) == "(Z/5)^2 + Z/9 + Z/64");
  for (const auto& name : gamma_ab_examples()) {
    const GammaAbResult r = gamma_ab(name, name == "lens" ? std::optional<std::uint64_t>(5) : std::nullopt);
    CHECK(*r.group.order() == *r.g_ab.order() * *r.ko7.order());
    CHECK(!r.citation.empty());
  }
  CHECK_THROWS_AS(gamma_ab("lens", 4), Error);
  CHECK_THROWS_AS(gamma_ab("lens", 1), Error);
  CHECK_THROWS_AS(gamma_ab("lens"), Error);
  CHECK_THROWS_AS(gamma_ab("quaternion-Q8", 3), Error);
  try {
    gamma_ab("klein-bottle");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_preset);
  }
  CHECK_NOTHROW(gamma_ab("lens", 3, Integer(7)));
  CHECK_THROWS_AS(gamma_ab("lens", 3, Integer(6)), Error);
}
