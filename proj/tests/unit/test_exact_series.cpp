#include <random>
#include <thread>

#include "doctest.h"
#include "moduli/error.hpp"
#include "moduli/exact_series.hpp"
#include "oracles.hpp"

using namespace moduli;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::invalid_argument;
}

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < order; ++i) c.push_back(ratio(num(rng), den(rng)));
  if (unit_constant) c[0] = 1;
  return TruncatedSeries(order, c);
}

bool all_reduced(const TruncatedSeries& s) {
  for (const Rational& q : s.coefficients()) {
    if (gcd(q.get_num(), q.get_den()) != 1 || q.get_den() <= 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rationals parse exactly and reject zero denominators") {
  CHECK(parse_rational("-6/4") == ratio(-3, 2));
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK(to_string(parse_rational("-3/2")) == "-3/2");
  CHECK(parse_integer("-200") == -200);
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_rational("1.5"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_rational(""); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_integer("12a"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { ratio(1, 0); }) == ErrorKind::invalid_argument);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == ratio(-1, 2));
  CHECK(bernoulli(4) == ratio(-1, 30));
  CHECK(bernoulli(3) == 0);
  for (unsigned k = 2; k <= 40; ++k) CHECK(bernoulli(k) == oracle::bernoulli_at(k));
}

TEST_CASE("bernoulli memo gives the same answer from many threads") {
  std::vector<Rational> seen(8);
  std::vector<std::thread> pool;
  for (int i = 0; i < 8; ++i) pool.emplace_back([&, i] { seen[i] = bernoulli(60 + (i % 2) * 2); });
  for (auto& t : pool) t.join();
  for (int i = 0; i < 8; ++i) CHECK(seen[i] == oracle::bernoulli_at(60 + (i % 2) * 2));
}

TEST_CASE("series products") {
  const TruncatedSeries a(3, {1, 1});
  const TruncatedSeries b(3, {1, -1});
  CHECK(series_mul(a, b) == TruncatedSeries(3, {1, 0, -1}));
  const TruncatedSeries five = series_int_pow(TruncatedSeries(5, {1, 1}), 5);
  CHECK(five[3] == 10);
  CHECK(series_mul(a, TruncatedSeries::constant(3, 1)) == a);
  CHECK(kind_of([] { TruncatedSeries(3) * TruncatedSeries(4); }) == ErrorKind::mismatched_truncation);
  CHECK(kind_of([] { TruncatedSeries(3) + TruncatedSeries(2); }) == ErrorKind::mismatched_truncation);
}

TEST_CASE("series inverse") {
  for (int d = -3; d <= 4; ++d) {
    const TruncatedSeries inv = series_inv(TruncatedSeries::binomial_factor(4, d));
    CHECK(inv == TruncatedSeries(4, {1, -d, d * d, -d * d * d}));
  }
  CHECK(series_inv(TruncatedSeries::constant(3, 1)) == TruncatedSeries::constant(3, 1));
  CHECK(series_inv(TruncatedSeries::constant(3, 2)) == TruncatedSeries::constant(3, ratio(1, 2)));
  CHECK(kind_of([] { series_inv(TruncatedSeries(3, {0, 1})); }) == ErrorKind::non_invertible);
  CHECK(kind_of([] { series_int_pow(TruncatedSeries(3, {0, 1}), -1); }) == ErrorKind::non_invertible);
}

TEST_CASE("integer powers") {
  const TruncatedSeries one_plus_x(4, {1, 1});
  CHECK(series_int_pow(one_plus_x, 0) == TruncatedSeries::constant(4, 1));
  CHECK(series_int_pow(TruncatedSeries::binomial_factor(5, 1, 2), 2) == TruncatedSeries(5, {1, 0, 2, 0, 1}));
  CHECK(series_int_pow(one_plus_x, -1) == series_inv(one_plus_x));
  CHECK(series_int_pow(one_plus_x, -3) * series_int_pow(one_plus_x, 3) == TruncatedSeries::constant(4, 1));
}

TEST_CASE("x / tanh x") {
  CHECK(x_over_tanh(1) == TruncatedSeries::constant(1, 1));
  const TruncatedSeries s = x_over_tanh(12);
  CHECK(s[2] == ratio(1, 3));
  CHECK(s[4] == ratio(-1, 45));
  for (std::size_t k = 1; k < 12; k += 2) CHECK(s[k] == 0);

  // tanh(x)/x from the exponential series: (sinh x / x) / cosh x by long
  // division, with no use of the library's inverse.
  constexpr std::size_t N = 12;
  std::vector<Rational> sinh_over_x(N), cosh(N), q(N);
  Integer fact = 1;
  for (std::size_t k = 0; k <= N; ++k) {
    if (k > 0) fact *= static_cast<unsigned long>(k);
    if (k % 2 == 0 && k < N) cosh[k] = Rational(1) / Rational(fact);
    if (k % 2 == 1 && k - 1 < N) sinh_over_x[k - 1] = Rational(1) / Rational(fact);
  }
  for (std::size_t k = 0; k < N; ++k) {
    Rational acc = sinh_over_x[k];
    for (std::size_t j = 0; j < k; ++j) acc -= q[j] * cosh[k - j];
    q[k] = acc;  // cosh[0] == 1
  }
  CHECK(s * TruncatedSeries(N, q) == TruncatedSeries::constant(N, 1));
}

TEST_CASE("variable scaling") {
  CHECK(scale_variable(TruncatedSeries(3, {1, 1}), 7) == TruncatedSeries(3, {1, 7}));
  const TruncatedSeries s = x_over_tanh(8);
  CHECK(scale_variable(s, 1) == s);
  CHECK(scale_variable(s, 2)[2] == ratio(4, 3));
}

TEST_CASE("ring axioms and inverse round trip on random series") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t order = 1 + trial % 9;
    const auto a = random_series(rng, order, false);
    const auto b = random_series(rng, order, false);
    const auto c = random_series(rng, order, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(all_reduced(a * b + c));
    const auto u = random_series(rng, order, true);
    CHECK(u * series_inv(u) == TruncatedSeries::constant(order, 1));
    CHECK(all_reduced(series_inv(u)));
  }
}

TEST_CASE("coefficients past the order read as zero") {
  const TruncatedSeries s(2, {1, 2, 3});
  CHECK(s.order() == 2);
  CHECK(s[1] == 2);
  CHECK(s[2] == 0);
  CHECK(s[100] == 0);
}
