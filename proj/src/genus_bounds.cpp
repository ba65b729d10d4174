#include "moduli/genus_bounds.hpp"

#include "moduli/ci_invariants.hpp"
#include "moduli/error.hpp"

namespace moduli {

void ManifoldInvariants::validate() const {
  if (half_dim < 1) throw Error(ErrorKind::invalid_argument, "half dimension n must be >= 1");
  if (betti_below.size() != static_cast<std::size_t>(half_dim))
    throw Error(ErrorKind::invalid_argument,
                "expected " + std::to_string(half_dim) + " Betti numbers b_0..b_{n-1}, got " +
                    std::to_string(betti_below.size()));
  if (betti_below.front() < 1) throw Error(ErrorKind::invalid_argument, "b_0 must be >= 1");
  for (const auto& b : betti_below)
    if (b < 0) throw Error(ErrorKind::invalid_argument, "Betti numbers must be non-negative");
  if (half_dim % 2 != 0 && signature != 0)
    throw Error(ErrorKind::invalid_argument, "signature must vanish when n is odd");
  if (e_generators < 0) throw Error(ErrorKind::invalid_argument, "e must be >= 0");
  if (hirsch_length < 0) throw Error(ErrorKind::invalid_argument, "Hirsch length must be >= 0");
}

ManifoldInvariants manifold_invariants(const CompleteIntersection& ci, bool spherical) {
  ManifoldInvariants inv;
  inv.half_dim = ci.complex_dim();
  inv.euler_char = euler_characteristic(ci);
  inv.signature = signature(ci);
  for (int i = 0; i < inv.half_dim; ++i) inv.betti_below.emplace_back(i % 2 == 0 ? 1 : 0);
  inv.spherical = spherical;
  return inv;
}

Integer algebraic_genus(const ManifoldInvariants& inv) {
  inv.validate();
  Integer alternating = 0;
  for (std::size_t i = 0; i < inv.betti_below.size(); ++i)
    alternating += (i % 2 == 0) ? inv.betti_below[i] : Integer(-inv.betti_below[i]);
  Rational g = ratio(inv.euler_char, 2) - Rational(alternating);
  g.canonicalize();
  if (inv.half_dim % 2 != 0) g = -g;
  Rational half_sigma(abs(inv.signature), 2);
  half_sigma.canonicalize();
  g -= half_sigma;
  return to_integer(g, "algebraic genus");
}

GenusInterval genus_interval(const ManifoldInvariants& inv) {
  if (inv.half_dim <= 2)
    throw Error(ErrorKind::invalid_argument, "genus estimate needs n > 2 (dimension > 4)");
  const Integer ga = algebraic_genus(inv);
  const int n = inv.half_dim;
  const bool tight = n % 2 == 0 || n == 3 || n == 7;
  const int c = tight ? inv.e_generators : 1 + inv.e_generators;
  return GenusInterval{ga - c, ga, c};
}

Integer dim6_exact_genus(const Integer& b3) {
  if (b3 < 0) throw Error(ErrorKind::invalid_argument, "b_3 must be non-negative");
  if (b3 % 2 != 0)
    throw Error(ErrorKind::invalid_argument, "b_3 of a closed 6-manifold is even, got " + b3.get_str());
  return b3 / 2;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

StableRange stable_range(const Integer& genus, bool spherical, int hirsch) {
  if (genus < 0) throw Error(ErrorKind::invalid_argument, "genus must be non-negative");
  if (hirsch < 0) throw Error(ErrorKind::invalid_argument, "Hirsch length must be non-negative");
  StableRange r;
  if (hirsch == 0) {
    r.bound = spherical ? ratio(genus - 3, 2) : ratio(genus - 4, 3);
    r.rule = spherical ? "(g-3)/2" : "(g-4)/3";
  } else {
    r.bound = spherical ? ratio(genus - hirsch - 5, 2) : ratio(genus - hirsch - 6, 3);
    r.rule = spherical ? "(g-(h+5))/2" : "(g-(h+6))/3";
  }
  r.floor = floor_of(r.bound);
  return r;
}

}  // namespace moduli
