#pragma once

// Exact rationals and univariate power series truncated at a fixed order.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace moduli {

using Integer = mpz_class;
using Rational = mpq_class;  // gmp keeps every result in lowest terms

/// Parses "p", "-p" or "p/q". Rejects a zero denominator and trailing junk.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// num/den in lowest terms. Throws invalid_argument for den == 0.
Rational ratio(const Integer& num, const Integer& den);
bool is_integral(const Rational& q);
/// Throws inconsistent_invariants when q is not an integer.
Integer to_integer(const Rational& q, std::string_view what);

Integer binomial(long n, long k);

/// B_k with x/(e^x - 1) = sum B_k x^k / k!, so B_1 = -1/2. Memoized and
/// thread-safe.
Rational bernoulli(unsigned k);

class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  /// Coefficients beyond `order` are dropped, missing ones are zero.
  TruncatedSeries(std::size_t order, std::vector<Rational> coefficients);
  TruncatedSeries(std::size_t order, std::initializer_list<Rational> coefficients);

  static TruncatedSeries constant(std::size_t order, const Rational& c);
  /// 1 + c x^k.
  static TruncatedSeries binomial_factor(std::size_t order, const Rational& c, std::size_t k = 1);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Zero for k >= order().
  Rational operator[](std::size_t k) const;

  TruncatedSeries operator+(const TruncatedSeries& other) const;
  TruncatedSeries operator-(const TruncatedSeries& other) const;
  TruncatedSeries operator*(const TruncatedSeries& other) const;
  TruncatedSeries scaled(const Rational& c) const;

  bool operator==(const TruncatedSeries& other) const = default;

 private:
  void require_same_order(const TruncatedSeries& other) const;

  std::vector<Rational> coeffs_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_inv(const TruncatedSeries& a);
TruncatedSeries series_int_pow(const TruncatedSeries& a, long k);

/// x / tanh(x) = sum 2^{2k} B_{2k} x^{2k} / (2k)!.
TruncatedSeries x_over_tanh(std::size_t order);

/// Substitutes x -> c x.
TruncatedSeries scale_variable(const TruncatedSeries& a, const Rational& c);

std::string to_string(const TruncatedSeries& s);

}  // namespace moduli
