#include "moduli/kappa_rings.hpp"

#include <algorithm>
#include <cctype>

#include "moduli/error.hpp"
#include "moduli/genus_bounds.hpp"

namespace moduli {

void StructurePreset::validate() const {
  if (fiber_dim <= 0 || fiber_dim % 2 != 0)
    throw Error(ErrorKind::invalid_argument,
                "fibre dimension must be even and positive, got " + std::to_string(fiber_dim));
  if (!base || base->empty())
    throw Error(ErrorKind::invalid_argument, "at least one generator is required");
  if (!oriented)
    throw Error(ErrorKind::invalid_argument,
                "non-orientable structures (twisted coefficients) are not supported");
}

std::vector<std::string> StructurePreset::warnings() const {
  std::vector<std::string> out;
  if (fiber_dim < 6)
    out.push_back("fibre dimension " + std::to_string(fiber_dim) +
                  " < 6: the stable-range theorem does not apply");
  return out;
}

namespace {

GeneratorSet sorted_by_degree(std::vector<Generator> gens) {
  // Ties: Pontryagin classes before the Euler class.
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Generator& a, const Generator& b) { return a.degree < b.degree; });
  return GeneratorSet(std::move(gens));
}

std::vector<Generator> pontryagin_range(int from, int to) {
  std::vector<Generator> out;
  for (int i = from; i <= to; ++i)
    out.push_back(Generator{"p" + std::to_string(i), 4 * i, Parity::even});
  return out;
}

}  // namespace

GeneratorSet bso_cover_generators(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be >= 1");
  auto gens = pontryagin_range((n + 1 + 3) / 4, n - 1);
  gens.push_back(Generator{"e", 2 * n, Parity::even});
  return sorted_by_degree(std::move(gens));
}

GeneratorSet bso_generators(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be >= 1");
  auto gens = pontryagin_range(1, n - 1);
  gens.push_back(Generator{"e", 2 * n, Parity::even});
  return sorted_by_degree(std::move(gens));
}

StructurePreset bso_cover_preset(int n) {
  StructurePreset p;
  p.name = "bso-cover(" + std::to_string(n) + ")";
  p.fiber_dim = 2 * n;
  p.base = std::make_shared<const GeneratorSet>(bso_cover_generators(n));
  return p;
}

StructurePreset vd_spinc_preset() {
  StructurePreset p;
  p.name = "vd-spinc";
  p.fiber_dim = 6;
  p.base = std::make_shared<const GeneratorSet>(GeneratorSet({
      {"t", 2, Parity::even},
      {"p1", 4, Parity::even},
      {"e", 6, Parity::even},
      {"p2", 8, Parity::even},
  }));
  return p;
}

StructurePreset preset_by_name(std::string_view name) {
  if (name == "vd-spinc") return vd_spinc_preset();
  for (std::string_view prefix : {"bso-cover(", "bso-cover:"}) {
    if (name.substr(0, prefix.size()) != prefix) continue;
    std::string_view arg = name.substr(prefix.size());
    if (prefix.back() == '(') {
      if (arg.empty() || arg.back() != ')') break;
      arg.remove_suffix(1);
    }
    const Integer n = parse_integer(arg);
    if (n < 1 || n > 1000)
      throw Error(ErrorKind::invalid_argument, "bso-cover needs 1 <= n <= 1000");
    return bso_cover_preset(static_cast<int>(n.get_si()));
  }
  throw Error(ErrorKind::unknown_preset, "unknown preset '" + std::string(name) +
                                             "' (known: vd-spinc, bso-cover(n), custom file)");
}

std::optional<std::size_t> KappaAlgebra::find(const Monomial& c) const {
  auto it = by_base_.find(c);
  if (it == by_base_.end()) return std::nullopt;
  return it->second;
}

std::string kappa_name(const GeneratorSet& base, const Monomial& c) {
  return "k[" + to_string(base, c) + "]";
}

KappaAlgebra make_kappa_algebra(GeneratorSetPtr base, std::vector<Monomial> monomials,
                                int fiber_dim, int max_degree) {
  // Degree first, then the reverse of the basis order.
  std::stable_sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grlex_before(b, a);
  });
  std::vector<Generator> gens;
  gens.reserve(monomials.size());
  for (const Monomial& c : monomials) {
    if (c.degree() <= fiber_dim)
      throw Error(ErrorKind::invalid_argument,
                  "kappa_c needs |c| > fibre dimension, got " + to_string(*base, c));
    int odd_factors = 0;
    for (const Factor& f : c.factors())
      if ((*base)[f.gen].parity == Parity::odd) ++odd_factors;
    const int degree = c.degree() - fiber_dim;
    const bool odd = odd_factors % 2 != 0 || degree % 2 != 0;
    gens.push_back(Generator{kappa_name(*base, c), degree, odd ? Parity::odd : Parity::even});
  }
  KappaAlgebra k;
  k.base = std::move(base);
  k.generators = std::make_shared<const GeneratorSet>(GeneratorSet(std::move(gens)));
  k.base_monomials = std::move(monomials);
  k.fiber_dim = fiber_dim;
  k.max_degree = max_degree;
  for (std::size_t i = 0; i < k.base_monomials.size(); ++i) k.by_base_.emplace(k.base_monomials[i], i);
  return k;
}

KappaAlgebra kappa_generator_set(const StructurePreset& preset, int max_kappa_degree) {
  preset.validate();
  if (max_kappa_degree < 1)
    throw Error(ErrorKind::invalid_argument, "maximal kappa degree must be >= 1");
  std::vector<Monomial> monomials;
  for (int deg = preset.fiber_dim + 1; deg <= preset.fiber_dim + max_kappa_degree; ++deg)
    for (Monomial& c : monomial_basis(*preset.base, deg)) monomials.push_back(std::move(c));
  return make_kappa_algebra(preset.base, std::move(monomials), preset.fiber_dim, max_kappa_degree);
}

KappaAlgebra wg_closed_generator_set(int n, int max_kappa_degree) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "closed W_g generators need n >= 3");
  if (max_kappa_degree < 1)
    throw Error(ErrorKind::invalid_argument, "maximal kappa degree must be >= 1");
  auto full = std::make_shared<const GeneratorSet>(bso_generators(n));
  const GeneratorSet cover = bso_cover_generators(n);

  auto to_full = [&](const Monomial& c) {
    std::vector<Factor> factors;
    for (const Factor& f : c.factors())
      factors.push_back(Factor{static_cast<std::uint32_t>(full->index_of(cover[f.gen].name)), f.exp});
    return Monomial(*full, std::move(factors));
  };

  std::vector<Monomial> monomials;
  for (int deg = 2 * n + 1; deg <= 2 * n + max_kappa_degree; ++deg)
    for (const Monomial& c : monomial_basis(cover, deg)) monomials.push_back(to_full(c));
  const std::size_t e = full->index_of("e");
  for (int i = 1; i <= n / 4; ++i) {
    if (4 * i > max_kappa_degree) break;
    const std::size_t p = full->index_of("p" + std::to_string(i));
    monomials.push_back(Monomial(*full, {Factor{static_cast<std::uint32_t>(e), 1},
                                         Factor{static_cast<std::uint32_t>(p), 1}}));
  }
  return make_kappa_algebra(std::move(full), std::move(monomials), 2 * n, max_kappa_degree);
}

std::vector<StableDegree> stable_cohomology_dims(const StructurePreset& preset,
                                                 const Integer& genus, bool spherical,
                                                 int max_degree) {
  const KappaAlgebra kappa = kappa_generator_set(preset, std::max(1, max_degree));
  const auto dims = hilbert_dims(*kappa.generators, max_degree);
  const StableRange range = stable_range(genus, spherical, 0);
  std::vector<StableDegree> out;
  for (int k = 0; k <= max_degree; ++k)
    out.push_back(StableDegree{k, dims[k], Rational(k) <= range.bound});
  return out;
}

std::vector<std::uint64_t> leray_hirsch_dims(int n, int max_degree) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "Leray-Hirsch dimensions need n >= 3");
  const KappaAlgebra kappa = kappa_generator_set(bso_cover_preset(n), std::max(1, max_degree));
  const auto fibre = hilbert_dims(*kappa.generators, max_degree);
  std::vector<Generator> ps;
  for (int i = 1; i <= n / 4; ++i) ps.push_back(Generator{"p" + std::to_string(i), 4 * i, Parity::even});
  const auto base = hilbert_dims(GeneratorSet(std::move(ps)), max_degree);
  std::vector<std::uint64_t> out(fibre.size(), 0);
  for (std::size_t i = 0; i < fibre.size(); ++i)
    for (std::size_t j = 0; i + j < fibre.size(); ++j) out[i + j] += fibre[i] * base[j];
  return out;
}

GradedPolynomial kappa_in_wg_generators(const KappaAlgebra& wg, int n, const Integer& genus,
                                        const Monomial& c) {
  const GeneratorSet& base = *wg.base;
  const Integer chi = n % 2 == 0 ? Integer(2 + 2 * genus) : Integer(2 - 2 * genus);
  if (chi == 0)
    throw Error(ErrorKind::invalid_argument,
                "chi(W_g) = 0: kappa classes cannot be rewritten through kappa_{e p_i}");
  const std::size_t e = base.index_of("e");
  const int k = n / 4;

  GradedPolynomial result = GradedPolynomial::constant(wg.generators, 1);
  std::vector<Factor> residual;
  for (const Factor& f : c.factors()) {
    const std::string& name = base[f.gen].name;
    int index = 0;
    if (name.size() > 1 && name[0] == 'p') index = std::stoi(name.substr(1));
    if (index >= 1 && index <= k) {
      const Monomial ep(base, {Factor{static_cast<std::uint32_t>(e), 1}, Factor{f.gen, 1}});
      auto g = wg.find(ep);
      if (!g)
        throw Error(ErrorKind::invalid_argument,
                    "kappa_{e p" + std::to_string(index) + "} exceeds the algebra's degree bound");
      const GradedPolynomial factor =
          GradedPolynomial::term(wg.generators, Monomial::generator(*wg.generators, *g),
                                 Rational(1) / Rational(chi));
      for (std::uint32_t j = 0; j < f.exp; ++j) result = result * factor;
    } else {
      residual.push_back(f);
    }
  }
  const Monomial rest(base, std::move(residual));
  const int fibre = 2 * n;
  if (rest.degree() > fibre) {
    auto g = wg.find(rest);
    if (!g)
      throw Error(ErrorKind::invalid_argument,
                  kappa_name(base, rest) + " exceeds the algebra's degree bound");
    return result * GradedPolynomial::term(wg.generators, Monomial::generator(*wg.generators, *g));
  }
  // Characteristic numbers of W_g: only the Euler number survives, since W_g
  // is stably parallelizable.
  const Monomial euler = Monomial::generator(base, e);
  if (rest == euler) return result.scaled(Rational(chi));
  return GradedPolynomial(wg.generators);
}

}  // namespace moduli
