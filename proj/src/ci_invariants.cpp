#include "moduli/ci_invariants.hpp"

#include <string>

#include "moduli/error.hpp"

namespace moduli {

CompleteIntersection::CompleteIntersection(int ambient_dim, std::vector<int> degrees)
    : ambient_dim_(ambient_dim), degrees_(std::move(degrees)) {
  if (degrees_.empty())
    throw Error(ErrorKind::invalid_argument, "a complete intersection needs at least one degree");
  for (int d : degrees_)
    if (d < 1)
      throw Error(ErrorKind::invalid_argument, "degrees must be positive, got " + std::to_string(d));
  if (complex_dim() < 1)
    throw Error(ErrorKind::invalid_argument,
                "complex dimension " + std::to_string(complex_dim()) + " < 1 for CP^" +
                    std::to_string(ambient_dim_) + " with " + std::to_string(degrees_.size()) +
                    " equations");
}

Integer CompleteIntersection::total_degree() const {
  Integer n = 1;
  for (int d : degrees_) n *= d;
  return n;
}

int CharacteristicMonomial::degree(int complex_dim) const {
  int deg = 2 * t_power + 2 * complex_dim * e_power;
  for (std::size_t i = 0; i < p_powers.size(); ++i)
    deg += 4 * static_cast<int>(i + 1) * p_powers[i];
  return deg;
}

TruncatedSeries total_chern_series(const CompleteIntersection& ci) {
  const std::size_t order = static_cast<std::size_t>(ci.complex_dim()) + 1;
  TruncatedSeries c = series_int_pow(TruncatedSeries::binomial_factor(order, 1),
                                     ci.ambient_dim() + 1);
  for (int d : ci.degrees())
    c = c * series_inv(TruncatedSeries::binomial_factor(order, d));
  return c;
}

TruncatedSeries total_pontryagin_series(const CompleteIntersection& ci) {
  const TruncatedSeries c = total_chern_series(ci);
  // c(x) c(-x) = prod (1 - x_j^2): the coefficient of x^{2i} is (-1)^i p_i.
  const TruncatedSeries product = c * scale_variable(c, -1);
  std::vector<Rational> p(product.order());
  for (std::size_t k = 0; k < product.order(); k += 2)
    p[k] = (k / 2) % 2 == 0 ? product[k] : Rational(-product[k]);
  return TruncatedSeries(product.order(), std::move(p));
}

Integer euler_characteristic(const CompleteIntersection& ci) {
  const TruncatedSeries c = total_chern_series(ci);
  return to_integer(c[static_cast<std::size_t>(ci.complex_dim())] * Rational(ci.total_degree()),
                    "Euler characteristic");
}

Integer signature(const CompleteIntersection& ci) {
  const int n = ci.complex_dim();
  if (n % 2 != 0) return 0;
  const std::size_t order = static_cast<std::size_t>(n) + 1;
  const TruncatedSeries l = x_over_tanh(order);
  TruncatedSeries total = series_int_pow(l, ci.ambient_dim() + 1);
  for (int d : ci.degrees()) total = total * series_inv(scale_variable(l, d));
  return to_integer(total[static_cast<std::size_t>(n)] * Rational(ci.total_degree()), "signature");
}

Integer middle_betti(const CompleteIntersection& ci) {
  const int n = ci.complex_dim();
  // Off the middle, b_i = 1 for even i in [0, 2n] and 0 otherwise.
  const Integer off_middle = (n + 1) - (n % 2 == 0 ? 1 : 0);
  Integer b = euler_characteristic(ci) - off_middle;
  if (n % 2 != 0) b = -b;
  if (b < 0)
    throw Error(ErrorKind::inconsistent_invariants,
                "negative middle Betti number " + b.get_str());
  return b;
}

int w2_parity(const CompleteIntersection& ci) {
  long c1 = ci.ambient_dim() + 1;
  for (int d : ci.degrees()) c1 -= d;
  return static_cast<int>(((c1 % 2) + 2) % 2);
}

Rational char_number(const CompleteIntersection& ci, const CharacteristicMonomial& monomial) {
  const int n = ci.complex_dim();
  if (monomial.t_power < 0 || monomial.e_power < 0)
    throw Error(ErrorKind::invalid_argument, "negative exponent in characteristic monomial");
  for (int k : monomial.p_powers)
    if (k < 0) throw Error(ErrorKind::invalid_argument, "negative exponent in characteristic monomial");
  const int deg = monomial.degree(n);
  if (deg != 2 * n)
    throw Error(ErrorKind::invalid_argument, "characteristic monomial has degree " +
                                                 std::to_string(deg) + ", expected " +
                                                 std::to_string(2 * n));
  const TruncatedSeries p = total_pontryagin_series(ci);
  const TruncatedSeries c = total_chern_series(ci);
  Rational value = Rational(ci.total_degree());
  for (std::size_t i = 0; i < monomial.p_powers.size(); ++i)
    for (int k = 0; k < monomial.p_powers[i]; ++k) value *= p[2 * (i + 1)];
  for (int k = 0; k < monomial.e_power; ++k) value *= c[static_cast<std::size_t>(n)];
  return value;
}

TangentialClassData tangential_data(const CompleteIntersection& ci) {
  const std::size_t n = static_cast<std::size_t>(ci.complex_dim());
  const TruncatedSeries c = total_chern_series(ci);
  const TruncatedSeries p = total_pontryagin_series(ci);
  TangentialClassData data;
  data.euler_char = euler_characteristic(ci);
  data.signature = signature(ci);
  data.p1_coeff = p[2];
  data.e_coeff = c[n];
  data.w2_parity = w2_parity(ci);
  data.middle_betti = middle_betti(ci);
  for (std::size_t i = 0; 2 * i <= n; ++i) data.pontryagin_coeffs.push_back(p[2 * i]);
  data.chern_coeffs = c.coefficients();
  return data;
}

}  // namespace moduli
