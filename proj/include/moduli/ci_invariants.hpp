#pragma once

// Characteristic classes and numbers of smooth complete intersections in CP^m.
//
// Everything is expressed through the hyperplane class t = i^*(x): a class of
// degree 2k is a rational multiple of t^k, and <[V], t^n> = N, the product of
// the degrees.

#include <vector>

#include "moduli/exact_series.hpp"

namespace moduli {

class CompleteIntersection {
 public:
  /// Throws invalid_argument unless degrees is non-empty, every degree is
  /// positive and the complex dimension ambient_dim - #degrees is at least 1.
  CompleteIntersection(int ambient_dim, std::vector<int> degrees);

  int ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int complex_dim() const noexcept { return ambient_dim_ - static_cast<int>(degrees_.size()); }
  Integer total_degree() const;

 private:
  int ambient_dim_;
  std::vector<int> degrees_;
};

/// Monomial t^a p_1^{k_1} ... p_r^{k_r} e^b in the tangential classes.
struct CharacteristicMonomial {
  int t_power = 0;
  std::vector<int> p_powers;  // p_powers[i] is the exponent of p_{i+1}
  int e_power = 0;

  int degree(int complex_dim) const;
};

struct TangentialClassData {
  Integer euler_char;
  Integer signature;
  Rational p1_coeff;
  Rational e_coeff;
  int w2_parity = 0;
  Integer middle_betti;
  std::vector<Rational> pontryagin_coeffs;  // index i holds p_i / t^{2i}, i = 0..floor(n/2)
  std::vector<Rational> chern_coeffs;       // index k holds c_k / t^k, k = 0..n
};

/// (1+x)^{m+1} / prod (1 + d_i x), truncated at n+1.
TruncatedSeries total_chern_series(const CompleteIntersection& ci);
/// Pontryagin classes, obtained from c(x) c(-x) = sum (-1)^i p_i x^{2i}.
TruncatedSeries total_pontryagin_series(const CompleteIntersection& ci);
/// N times the top Chern coefficient.
Integer euler_characteristic(const CompleteIntersection& ci);
/// Integral of the L-class (x/tanh x)^{m+1} / prod (d_i x / tanh(d_i x)); zero for odd n.
Integer signature(const CompleteIntersection& ci);
/// b_n, with the Betti numbers off the middle taken from CP^n (Lefschetz).
Integer middle_betti(const CompleteIntersection& ci);
/// (m + 1 - sum d_i) mod 2: 1 iff w_2 != 0.
int w2_parity(const CompleteIntersection& ci);
/// <[V], monomial>. Throws invalid_argument unless the degree is exactly 2n.
Rational char_number(const CompleteIntersection& ci, const CharacteristicMonomial& monomial);

TangentialClassData tangential_data(const CompleteIntersection& ci);

}  // namespace moduli
