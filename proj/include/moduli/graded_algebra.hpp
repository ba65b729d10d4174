#pragma once

// Free graded-commutative algebras over Q on weighted generators.
//
// Monomials are sparse exponent lists sorted by generator index. Odd
// generators appear with exponent at most one; moving them past each other
// costs a Koszul sign.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moduli/exact_series.hpp"

namespace moduli {

enum class Parity { even, odd };

std::string_view to_string(Parity p);
Parity parse_parity(std::string_view text);

struct Generator {
  std::string name;
  int degree = 0;
  Parity parity = Parity::even;

  bool operator==(const Generator&) const = default;
};

class GeneratorSet {
 public:
  GeneratorSet() = default;
  /// Throws invalid_argument on duplicate or empty names, non-positive
  /// degrees, or an odd-degree generator declared even.
  explicit GeneratorSet(std::vector<Generator> generators);

  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  auto begin() const { return gens_.begin(); }
  auto end() const { return gens_.end(); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find, but throws invalid_argument for an unknown name.
  std::size_t index_of(std::string_view name) const;

  bool operator==(const GeneratorSet& other) const { return gens_ == other.gens_; }

 private:
  std::vector<Generator> gens_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

struct Factor {
  std::uint32_t gen = 0;
  std::uint32_t exp = 0;

  auto operator<=>(const Factor&) const = default;
};

class Monomial {
 public:
  /// The unit monomial.
  Monomial() = default;
  /// Factors may come in any order; zero exponents are dropped. Throws
  /// invalid_argument for an odd generator with exponent > 1 or an index
  /// outside the set.
  Monomial(const GeneratorSet& gens, std::vector<Factor> factors);

  static Monomial generator(const GeneratorSet& gens, std::size_t index, std::uint32_t exp = 1);

  int degree() const noexcept { return degree_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::uint32_t exponent(std::size_t gen) const;
  bool is_unit() const noexcept { return factors_.empty(); }

  /// Total order: by degree, then by the factor lists. Used for map keys only.
  auto operator<=>(const Monomial&) const = default;

 private:
  friend struct MonomialAccess;
  int degree_ = 0;
  std::vector<Factor> factors_;
};

/// Graded-lex: lower degree first; within a degree, the monomial with the
/// larger exponent on the earliest generator where they differ comes first.
bool grlex_before(const Monomial& a, const Monomial& b);

/// Product with its Koszul sign, or nullopt when an odd generator repeats.
std::optional<std::pair<int, Monomial>> multiply_monomials(const GeneratorSet& gens,
                                                           const Monomial& a,
                                                           const Monomial& b);

/// Replaces one factor `from` (which must be present) by the generator `to`
/// and returns the sign of re-sorting, or nullopt if the result vanishes.
std::optional<std::pair<int, Monomial>> substitute_factor(const GeneratorSet& gens,
                                                          const Monomial& m, std::size_t from,
                                                          std::optional<std::size_t> to);

/// Factors in generator order, "name^k" for k > 1, separated by spaces; "1"
/// for the unit.
std::string to_string(const GeneratorSet& gens, const Monomial& m);
/// Inverse of to_string. Names may contain bracketed spaces ("k[t p1]").
Monomial parse_monomial(const GeneratorSet& gens, std::string_view text);

class GradedPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit GradedPolynomial(GeneratorSetPtr gens);
  static GradedPolynomial constant(GeneratorSetPtr gens, const Rational& c);
  static GradedPolynomial term(GeneratorSetPtr gens, const Monomial& m, const Rational& c = 1);
  static GradedPolynomial generator(GeneratorSetPtr gens, std::string_view name);

  const GeneratorSetPtr& generator_set() const noexcept { return gens_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// The common degree of all terms; nullopt for zero or inhomogeneous input.
  std::optional<int> homogeneous_degree() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  GradedPolynomial& operator+=(const GradedPolynomial& other);
  GradedPolynomial& operator-=(const GradedPolynomial& other);
  GradedPolynomial operator+(const GradedPolynomial& other) const;
  GradedPolynomial operator-(const GradedPolynomial& other) const;
  GradedPolynomial operator*(const GradedPolynomial& other) const;
  GradedPolynomial scaled(const Rational& c) const;

  bool operator==(const GradedPolynomial& other) const;

 private:
  void require_same_algebra(const GradedPolynomial& other) const;

  GeneratorSetPtr gens_;
  Terms terms_;
};

GradedPolynomial multiply(const GradedPolynomial& a, const GradedPolynomial& b);
GradedPolynomial power(const GradedPolynomial& a, unsigned k);

std::string to_string(const GradedPolynomial& p);

/// All monomials of exactly the given degree, in grlex_before order.
std::vector<Monomial> monomial_basis(const GeneratorSet& gens, int degree);

/// Dimensions of the graded pieces 0..max_degree.
std::vector<std::uint64_t> hilbert_dims(const GeneratorSet& gens, int max_degree);

/// Monomial basis of one degree together with its coordinate lookup.
class DegreeBasis {
 public:
  DegreeBasis(const GeneratorSet& gens, int degree);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  std::optional<std::size_t> index_of(const Monomial& m) const;

 private:
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

}  // namespace moduli
