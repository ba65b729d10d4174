#include <random>

#include "doctest.h"
#include "moduli/ci_invariants.hpp"
#include "moduli/error.hpp"

using namespace moduli;

TEST_CASE("construction is validated") {
  CHECK_THROWS_AS(CompleteIntersection(4, {}), Error);
  CHECK_THROWS_AS(CompleteIntersection(4, {0}), Error);
  CHECK_THROWS_AS(CompleteIntersection(2, {2, 2}), Error);
  const CompleteIntersection ci(5, {2, 3});
  CHECK(ci.complex_dim() == 3);
  CHECK(ci.total_degree() == 6);
}

TEST_CASE("total Chern series") {
  for (int d = 1; d <= 6; ++d) {
    const TruncatedSeries c = total_chern_series(CompleteIntersection(4, {d}));
    CHECK(c.order() == 4);
    CHECK(c[3] == 10 - 10 * d + 5 * d * d - d * d * d);
  }
  CHECK(total_chern_series(CompleteIntersection(3, {1})) == TruncatedSeries(3, {1, 3, 3}));
  CHECK(total_chern_series(CompleteIntersection(4, {2, 2}))[1] == 1);
}

TEST_CASE("Euler characteristic") {
  CHECK(euler_characteristic(CompleteIntersection(4, {5})) == -200);
  CHECK(euler_characteristic(CompleteIntersection(4, {1})) == 4);
  CHECK(euler_characteristic(CompleteIntersection(3, {4})) == 24);
  // Quadric surface S^2 x S^2 and the (2,2) intersection in CP^4 (a del Pezzo of degree 4).
  CHECK(euler_characteristic(CompleteIntersection(3, {2})) == 4);
  CHECK(euler_characteristic(CompleteIntersection(4, {2, 2})) == 8);
}

TEST_CASE("Pontryagin series") {
  for (int d = 1; d <= 6; ++d) CHECK(total_pontryagin_series(CompleteIntersection(4, {d}))[2] == 5 - d * d);
  CHECK(total_pontryagin_series(CompleteIntersection(3, {4}))[2] == -12);
  CHECK(total_pontryagin_series(CompleteIntersection(6, {2, 3}))[0] == 1);
}

TEST_CASE("signature") {
  CHECK(signature(CompleteIntersection(3, {4})) == -16);
  CHECK(signature(CompleteIntersection(4, {3})) == 0);
  CHECK(signature(CompleteIntersection(3, {2})) == 0);
  // Surfaces in CP^3: sigma = d(4 - d^2)/3.
  for (int d = 1; d <= 30; ++d) CHECK(signature(CompleteIntersection(3, {d})) * 3 == d * (4 - d * d));
  // CP^4 as a hyperplane in CP^5.
  CHECK(signature(CompleteIntersection(5, {1})) == 1);
}

TEST_CASE("middle Betti number") {
  for (long d = 1; d <= 8; ++d)
    CHECK(middle_betti(CompleteIntersection(4, {static_cast<int>(d)})) ==
          d * d * d * d - 5 * d * d * d + 10 * d * d - 10 * d + 4);
  CHECK(middle_betti(CompleteIntersection(4, {3})) == 10);
  CHECK(middle_betti(CompleteIntersection(4, {1})) == 0);
  CHECK(middle_betti(CompleteIntersection(3, {4})) == 22);
}

TEST_CASE("characteristic numbers of V_d") {
  for (int d = 1; d <= 6; ++d) {
    const CompleteIntersection ci(4, {d});
    CHECK(char_number(ci, {3, {}, 0}) == d);
    CHECK(char_number(ci, {1, {1}, 0}) == d * (5 - d * d));
    CHECK(char_number(ci, {0, {}, 1}) == d * (10 - 10 * d + 5 * d * d - d * d * d));
  }
  CHECK_THROWS_AS(char_number(CompleteIntersection(4, {3}), {2, {}, 0}), Error);
  CHECK_THROWS_AS(char_number(CompleteIntersection(4, {3}), {0, {1}, 1}), Error);
}

TEST_CASE("w2 parity") {
  CHECK(w2_parity(CompleteIntersection(4, {2})) == 1);
  CHECK(w2_parity(CompleteIntersection(4, {3})) == 0);
  CHECK(w2_parity(CompleteIntersection(4, {5})) == 0);
}

TEST_CASE("e coefficient times degree is the Euler characteristic") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> count(1, 3), deg(1, 6), extra(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> degrees(count(rng));
    for (int& d : degrees) d = deg(rng);
    const CompleteIntersection ci(static_cast<int>(degrees.size()) + extra(rng), degrees);
    const TangentialClassData t = tangential_data(ci);
    CHECK(t.e_coeff * Rational(ci.total_degree()) == Rational(t.euler_char));
    CHECK(t.middle_betti >= 0);
    // Appending a linear equation is the same as dropping one ambient dimension.
    std::vector<int> with_plane = degrees;
    with_plane.push_back(1);
    const TangentialClassData s = tangential_data(CompleteIntersection(ci.ambient_dim() + 1, with_plane));
    CHECK(s.euler_char == t.euler_char);
    CHECK(s.signature == t.signature);
    CHECK(s.p1_coeff == t.p1_coeff);
    CHECK(s.w2_parity == t.w2_parity);
  }
}

TEST_CASE("Euler characteristic growth for hypersurfaces") {
  // chi / d^{n+1} - (-1)^n is (n+2)(-1)^{n-1}/d plus O(1/d^2).
  for (int n = 2; n <= 4; ++n) {
    for (int d = 10; d <= 50; ++d) {
      const Integer chi = euler_characteristic(CompleteIntersection(n + 1, {d}));
      Integer dn1 = 1;
      for (int i = 0; i <= n; ++i) dn1 *= d;
      const Rational gap = Rational(chi) / Rational(dn1) - (n % 2 == 0 ? 1 : -1);
      CHECK(abs(gap) * d <= n + 3);
      CHECK(sgn(gap) == (n % 2 == 0 ? -1 : 1));
    }
  }
}
