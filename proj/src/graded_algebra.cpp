#include "moduli/graded_algebra.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "moduli/error.hpp"

namespace moduli {

struct MonomialAccess {
  static Monomial make(int degree, std::vector<Factor> factors) {
    Monomial m;
    m.degree_ = degree;
    m.factors_ = std::move(factors);
    return m;
  }
};

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parse_parity(std::string_view text) {
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  throw Error(ErrorKind::parse_error, "parity must be 'even' or 'odd', got '" + std::string(text) + "'");
}

GeneratorSet::GeneratorSet(std::vector<Generator> generators) : gens_(std::move(generators)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const Generator& g = gens_[i];
    if (g.name.empty()) throw Error(ErrorKind::invalid_argument, "generator names must be non-empty");
    if (g.degree <= 0)
      throw Error(ErrorKind::invalid_argument,
                  "generator '" + g.name + "' must have positive degree");
    if (g.degree % 2 != 0 && g.parity != Parity::odd)
      throw Error(ErrorKind::invalid_argument,
                  "odd-degree generator '" + g.name + "' must be declared odd over Q");
    if (!index_.emplace(g.name, i).second)
      throw Error(ErrorKind::invalid_argument, "duplicate generator name '" + g.name + "'");
  }
}

std::optional<std::size_t> GeneratorSet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GeneratorSet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::invalid_argument, "unknown generator '" + std::string(name) + "'");
}

Monomial::Monomial(const GeneratorSet& gens, std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const Factor& f : factors) {
    if (f.gen >= gens.size())
      throw Error(ErrorKind::invalid_argument, "generator index out of range");
    if (f.exp == 0) continue;
    if (!factors_.empty() && factors_.back().gen == f.gen)
      factors_.back().exp += f.exp;
    else
      factors_.push_back(f);
  }
  for (const Factor& f : factors_) {
    if (gens[f.gen].parity == Parity::odd && f.exp > 1)
      throw Error(ErrorKind::invalid_argument,
                  "odd generator '" + gens[f.gen].name + "' squares to zero");
    degree_ += gens[f.gen].degree * static_cast<int>(f.exp);
  }
}

Monomial Monomial::generator(const GeneratorSet& gens, std::size_t index, std::uint32_t exp) {
  return Monomial(gens, {Factor{static_cast<std::uint32_t>(index), exp}});
}

std::uint32_t Monomial::exponent(std::size_t gen) const {
  for (const Factor& f : factors_)
    if (f.gen == gen) return f.exp;
  return 0;
}

bool grlex_before(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  while (i < fa.size() && i < fb.size()) {
    if (fa[i].gen != fb[i].gen) return fa[i].gen < fb[i].gen;  // a has the earlier generator
    if (fa[i].exp != fb[i].exp) return fa[i].exp > fb[i].exp;
    ++i;
  }
  return i < fa.size() && i >= fb.size();
}

std::optional<std::pair<int, Monomial>> multiply_monomials(const GeneratorSet& gens,
                                                           const Monomial& a,
                                                           const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::vector<Factor> out;
  out.reserve(fa.size() + fb.size());
  // Each odd factor of b moves left past the odd factors of a with larger index.
  int swaps = 0;
  int odd_a_remaining = 0;
  for (const Factor& f : fa)
    if (gens[f.gen].parity == Parity::odd) ++odd_a_remaining;
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].gen < fb[j].gen)) {
      if (gens[fa[i].gen].parity == Parity::odd) --odd_a_remaining;
      out.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].gen < fa[i].gen) {
      if (gens[fb[j].gen].parity == Parity::odd) swaps += odd_a_remaining;
      out.push_back(fb[j++]);
    } else {
      if (gens[fa[i].gen].parity == Parity::odd) return std::nullopt;
      out.push_back(Factor{fa[i].gen, fa[i].exp + fb[j].exp});
      ++i;
      ++j;
    }
  }
  return std::make_pair(swaps % 2 == 0 ? 1 : -1,
                        MonomialAccess::make(a.degree() + b.degree(), std::move(out)));
}

std::optional<std::pair<int, Monomial>> substitute_factor(const GeneratorSet& gens,
                                                          const Monomial& m, std::size_t from,
                                                          std::optional<std::size_t> to) {
  std::vector<Factor> rest;
  rest.reserve(m.factors().size() + 1);
  bool found = false;
  for (const Factor& f : m.factors()) {
    if (f.gen == from) {
      found = true;
      if (f.exp > 1) rest.push_back(Factor{f.gen, f.exp - 1});
    } else {
      rest.push_back(f);
    }
  }
  if (!found) throw Error(ErrorKind::invalid_argument, "factor to substitute is not present");
  int degree = m.degree() - gens[from].degree;
  if (!to) return std::make_pair(1, MonomialAccess::make(degree, std::move(rest)));

  const std::size_t h = *to;
  degree += gens[h].degree;
  int swaps = 0;
  if (gens[h].parity == Parity::odd) {
    // h starts where `from` was and moves to its sorted position.
    for (const Factor& f : rest) {
      if (gens[f.gen].parity != Parity::odd) continue;
      if (f.gen == h) return std::nullopt;
      const bool before_slot = f.gen < from;
      const bool before_h = f.gen < h;
      if (before_slot != before_h) ++swaps;
    }
  }
  auto pos = std::lower_bound(rest.begin(), rest.end(), Factor{static_cast<std::uint32_t>(h), 0},
                              [](const Factor& x, const Factor& y) { return x.gen < y.gen; });
  if (pos != rest.end() && pos->gen == h)
    ++pos->exp;
  else
    rest.insert(pos, Factor{static_cast<std::uint32_t>(h), 1});
  return std::make_pair(swaps % 2 == 0 ? 1 : -1, MonomialAccess::make(degree, std::move(rest)));
}

std::string to_string(const GeneratorSet& gens, const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const Factor& f : m.factors()) {
    if (!out.empty()) out += ' ';
    out += gens[f.gen].name;
    if (f.exp > 1) out += '^' + std::to_string(f.exp);
  }
  return out;
}

Monomial parse_monomial(const GeneratorSet& gens, std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if ((c == ' ' || c == '*') && depth == 0) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  if (depth != 0)
    throw Error(ErrorKind::parse_error, "unbalanced brackets in monomial '" + std::string(text) + "'");
  if (tokens.size() == 1 && tokens[0] == "1") return Monomial();

  std::vector<Factor> factors;
  for (const std::string& tok : tokens) {
    std::string name = tok;
    std::uint32_t exp = 1;
    const auto caret = tok.rfind('^');
    if (caret != std::string::npos && tok.find(']', caret) == std::string::npos) {
      name = tok.substr(0, caret);
      const std::string e = tok.substr(caret + 1);
      const Integer parsed = parse_integer(e);
      if (parsed < 1 || parsed > std::numeric_limits<std::uint32_t>::max())
        throw Error(ErrorKind::parse_error, "bad exponent in '" + tok + "'");
      exp = static_cast<std::uint32_t>(parsed.get_ui());
    }
    auto idx = gens.find(name);
    if (!idx)
      throw Error(ErrorKind::parse_error,
                  "unknown generator '" + name + "' in monomial '" + std::string(text) + "'");
    factors.push_back(Factor{static_cast<std::uint32_t>(*idx), exp});
  }
  return Monomial(gens, std::move(factors));
}

GradedPolynomial::GradedPolynomial(GeneratorSetPtr gens) : gens_(std::move(gens)) {
  if (!gens_) throw Error(ErrorKind::invalid_argument, "polynomial needs a generator set");
}

GradedPolynomial GradedPolynomial::constant(GeneratorSetPtr gens, const Rational& c) {
  return term(std::move(gens), Monomial(), c);
}

GradedPolynomial GradedPolynomial::term(GeneratorSetPtr gens, const Monomial& m, const Rational& c) {
  GradedPolynomial p(std::move(gens));
  p.add_term(m, c);
  return p;
}

GradedPolynomial GradedPolynomial::generator(GeneratorSetPtr gens, std::string_view name) {
  const std::size_t i = gens->index_of(name);
  const Monomial m = Monomial::generator(*gens, i);
  return term(std::move(gens), m);
}

std::optional<int> GradedPolynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  // Keys are ordered by degree first.
  if (terms_.rbegin()->first.degree() != d) return std::nullopt;
  return d;
}

Rational GradedPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GradedPolynomial::require_same_algebra(const GradedPolynomial& other) const {
  if (gens_ != other.gens_ && !(*gens_ == *other.gens_))
    throw Error(ErrorKind::generator_set_mismatch, "polynomials live in different algebras");
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& other) {
  require_same_algebra(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& other) {
  require_same_algebra(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GradedPolynomial GradedPolynomial::operator+(const GradedPolynomial& other) const {
  GradedPolynomial r = *this;
  r += other;
  return r;
}

GradedPolynomial GradedPolynomial::operator-(const GradedPolynomial& other) const {
  GradedPolynomial r = *this;
  r -= other;
  return r;
}

GradedPolynomial GradedPolynomial::operator*(const GradedPolynomial& other) const {
  require_same_algebra(other);
  GradedPolynomial r(gens_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) {
      auto prod = multiply_monomials(*gens_, ma, mb);
      if (!prod) continue;
      r.add_term(prod->second, prod->first > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    }
  return r;
}

GradedPolynomial GradedPolynomial::scaled(const Rational& c) const {
  GradedPolynomial r(gens_);
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

bool GradedPolynomial::operator==(const GradedPolynomial& other) const {
  return terms_ == other.terms_ && (gens_ == other.gens_ || *gens_ == *other.gens_);
}

GradedPolynomial multiply(const GradedPolynomial& a, const GradedPolynomial& b) { return a * b; }

GradedPolynomial power(const GradedPolynomial& a, unsigned k) {
  GradedPolynomial r = GradedPolynomial::constant(a.generator_set(), 1);
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

std::string to_string(const GradedPolynomial& p) {
  if (p.is_zero()) return "0";
  // Print in basis order.
  std::vector<std::pair<const Monomial*, const Rational*>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(&m, &c);
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& x, const auto& y) { return grlex_before(*x.first, *y.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = *c < 0;
    const Rational magnitude = abs(*c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool unit = m->is_unit();
    if (magnitude != 1 || unit) {
      os << magnitude.get_str();
      if (!unit) os << ' ';
    }
    if (!unit) os << to_string(*p.generator_set(), *m);
  }
  return os.str();
}

namespace {

/// reachable[i][r]: degree r is attainable using generators i..end.
std::vector<std::vector<char>> reachability(const GeneratorSet& gens, int degree) {
  const std::size_t n = gens.size();
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(degree + 1, 0));
  reach[n][0] = 1;
  for (std::size_t i = n; i-- > 0;) {
    const int d = gens[i].degree;
    const int max_exp = gens[i].parity == Parity::odd ? 1 : degree / d;
    for (int r = 0; r <= degree; ++r)
      for (int e = 0; e <= max_exp && e * d <= r; ++e)
        if (reach[i + 1][r - e * d]) {
          reach[i][r] = 1;
          break;
        }
  }
  return reach;
}

void enumerate(const GeneratorSet& gens, const std::vector<std::vector<char>>& reach,
               std::size_t i, int remaining, int degree, std::vector<Factor>& stack,
               std::vector<Monomial>& out) {
  if (i == gens.size()) {
    if (remaining == 0) out.push_back(MonomialAccess::make(degree, stack));
    return;
  }
  const int d = gens[i].degree;
  const int max_exp = gens[i].parity == Parity::odd ? std::min(1, remaining / d) : remaining / d;
  for (int e = max_exp; e >= 0; --e) {
    const int rest = remaining - e * d;
    if (!reach[i + 1][rest]) continue;
    if (e > 0) stack.push_back(Factor{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(e)});
    enumerate(gens, reach, i + 1, rest, degree, stack, out);
    if (e > 0) stack.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(const GeneratorSet& gens, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const auto reach = reachability(gens, degree);
  if (!reach[0][degree]) return out;
  std::vector<Factor> stack;
  enumerate(gens, reach, 0, degree, degree, stack, out);
  return out;
}

std::vector<std::uint64_t> hilbert_dims(const GeneratorSet& gens, int max_degree) {
  if (max_degree < 0) return {};
  std::vector<std::uint64_t> h(static_cast<std::size_t>(max_degree) + 1, 0);
  h[0] = 1;
  auto add = [](std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
      throw Error(ErrorKind::size_limit, "graded dimension overflows 64 bits");
    return a + b;
  };
  for (const Generator& g : gens) {
    const auto d = static_cast<std::size_t>(g.degree);
    if (g.parity == Parity::even) {
      for (std::size_t k = d; k < h.size(); ++k) h[k] = add(h[k], h[k - d]);
    } else {
      for (std::size_t k = h.size(); k-- > d;) h[k] = add(h[k], h[k - d]);
    }
  }
  return h;
}

DegreeBasis::DegreeBasis(const GeneratorSet& gens, int degree)
    : degree_(degree), monomials_(monomial_basis(gens, degree)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> DegreeBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace moduli
