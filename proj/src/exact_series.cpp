#include "moduli/exact_series.hpp"

#include <cctype>
#include <mutex>
#include <sstream>

#include "moduli/error.hpp"

namespace moduli {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body))
    throw Error(ErrorKind::parse_error, "malformed integer '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!all_digits(den))
    throw Error(ErrorKind::parse_error, "malformed rational '" + std::string(text) + "'");
  Integer n = parse_integer(num);
  Integer d(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorKind::parse_error, "zero denominator in rational '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q, std::string_view what) {
  if (!is_integral(q))
    throw Error(ErrorKind::inconsistent_invariants,
                std::string(what) + " is not an integer: " + q.get_str());
  return q.get_num();
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational bernoulli(unsigned k) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (table.size() <= k) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    const long m = static_cast<long>(table.size());
    Rational acc = 0;
    for (long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * table[j];
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[k];
}

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order, Rational(0));
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::initializer_list<Rational> coefficients)
    : TruncatedSeries(order, std::vector<Rational>(coefficients)) {}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const Rational& c) {
  return TruncatedSeries(order, {c});
}

TruncatedSeries TruncatedSeries::binomial_factor(std::size_t order, const Rational& c,
                                                 std::size_t k) {
  TruncatedSeries s = constant(order, 1);
  if (k < order) s.coeffs_[k] += c;
  return s;
}

Rational TruncatedSeries::operator[](std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

void TruncatedSeries::require_same_order(const TruncatedSeries& other) const {
  if (order() != other.order())
    throw Error(ErrorKind::mismatched_truncation,
                "truncation orders differ: " + std::to_string(order()) + " vs " +
                    std::to_string(other.order()));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
  require_same_order(other);
  TruncatedSeries r(order());
  for (std::size_t k = 0; k < order(); ++k) r.coeffs_[k] = coeffs_[k] + other.coeffs_[k];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
  require_same_order(other);
  TruncatedSeries r(order());
  for (std::size_t k = 0; k < order(); ++k) r.coeffs_[k] = coeffs_[k] - other.coeffs_[k];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  require_same_order(other);
  const std::size_t n = order();
  TruncatedSeries r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) r.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
  TruncatedSeries r(order());
  for (std::size_t k = 0; k < order(); ++k) r.coeffs_[k] = coeffs_[k] * c;
  return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries series_inv(const TruncatedSeries& a) {
  const std::size_t n = a.order();
  if (n == 0) return a;
  const Rational a0 = a[0];
  if (a0 == 0) throw Error(ErrorKind::non_invertible, "series has zero constant term");
  std::vector<Rational> inv(n);
  inv[0] = 1 / a0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * inv[k - j];
    inv[k] = -acc / a0;
  }
  return TruncatedSeries(n, std::move(inv));
}

TruncatedSeries series_int_pow(const TruncatedSeries& a, long k) {
  TruncatedSeries base = k < 0 ? series_inv(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  TruncatedSeries result = TruncatedSeries::constant(a.order(), 1);
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TruncatedSeries x_over_tanh(std::size_t order) {
  std::vector<Rational> c(order);
  Integer factorial = 1;
  for (std::size_t k = 0; k < order; ++k) {
    if (k > 0) factorial *= static_cast<unsigned long>(k);
    if (k % 2 != 0) continue;
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, k);
    c[k] = Rational(two_pow) * bernoulli(static_cast<unsigned>(k)) / Rational(factorial);
  }
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries scale_variable(const TruncatedSeries& a, const Rational& c) {
  std::vector<Rational> out(a.order());
  Rational power = 1;
  for (std::size_t k = 0; k < a.order(); ++k) {
    out[k] = a[k] * power;
    power *= c;
  }
  return TruncatedSeries(a.order(), std::move(out));
}

std::string to_string(const TruncatedSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < s.order(); ++k) {
    if (s[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << s[k].get_str() << ')';
    if (k > 0) os << "x^" << k;
  }
  if (first) os << '0';
  os << " + O(x^" << s.order() << ')';
  return os.str();
}

}  // namespace moduli
