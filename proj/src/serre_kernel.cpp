#include "moduli/serre_kernel.hpp"

#include <future>

#include "moduli/error.hpp"

namespace moduli {

DerivationSpec::DerivationSpec(KappaAlgebra algebra, const std::string& t_symbol,
                               BoundaryValues boundary)
    : algebra_(std::move(algebra)), boundary_(std::move(boundary)) {
  const GeneratorSet& base = *algebra_.base;
  auto t = base.find(t_symbol);
  if (!t) throw Error(ErrorKind::invalid_argument, "base has no generator '" + t_symbol + "'");
  if (base[*t].degree != 2 || base[*t].parity != Parity::even)
    throw Error(ErrorKind::invalid_argument, "'" + t_symbol + "' must be an even class of degree 2");
  t_index_ = *t;
  for (const auto& [c, value] : boundary_)
    if (c.degree() != algebra_.fiber_dim)
      throw Error(ErrorKind::invalid_argument,
                  "boundary monomial '" + to_string(base, c) + "' has degree " +
                      std::to_string(c.degree()) + ", expected " +
                      std::to_string(algebra_.fiber_dim));

  images_.resize(algebra_.base_monomials.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Monomial& c = algebra_.base_monomials[i];
    const std::uint32_t m = c.exponent(t_index_);
    GeneratorImage& img = images_[i];
    if (m == 0) continue;
    auto lowered = substitute_factor(base, c, t_index_, std::nullopt);
    const Monomial& rest = lowered->second;
    if (rest.degree() > algebra_.fiber_dim) {
      auto target = algebra_.find(rest);
      if (!target)
        throw Error(ErrorKind::invalid_argument,
                    "kappa algebra is missing " + kappa_name(base, rest));
      img.kind = GeneratorImage::Kind::generator;
      img.coefficient = m;
      img.target = *target;
    } else if (rest.degree() == algebra_.fiber_dim) {
      auto it = boundary_.find(rest);
      if (it == boundary_.end()) {
        img.kind = GeneratorImage::Kind::missing;
        img.missing = rest;
      } else {
        img.kind = GeneratorImage::Kind::scalar;
        img.coefficient = Rational(m) * it->second;
      }
    }
  }
}

std::uint32_t DerivationSpec::t_exponent(std::size_t kappa_index) const {
  return algebra_.base_monomials.at(kappa_index).exponent(t_index_);
}

int DerivationSpec::involution_sign(const Monomial& m) const {
  std::uint64_t odd = 0;
  for (const Factor& f : m.factors())
    odd += static_cast<std::uint64_t>(t_exponent(f.gen)) * f.exp;
  return odd % 2 == 0 ? 1 : -1;
}

bool DerivationSpec::has_nonzero_boundary() const {
  for (const auto& [c, v] : boundary_)
    if (v != 0) return true;
  return false;
}

std::vector<Monomial> DerivationSpec::required_boundary_monomials() const {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (t_exponent(i) == 0) continue;
    auto lowered = substitute_factor(*algebra_.base, algebra_.base_monomials[i], t_index_, std::nullopt);
    if (lowered->second.degree() == algebra_.fiber_dim) out.push_back(lowered->second);
  }
  return out;
}

BoundaryValues boundary_from_complete_intersection(const GeneratorSet& base, int fiber_dim,
                                                   const CompleteIntersection& ci) {
  if (fiber_dim != 2 * ci.complex_dim())
    throw Error(ErrorKind::invalid_argument,
                "fibre dimension " + std::to_string(fiber_dim) +
                    " does not match the complete intersection's real dimension " +
                    std::to_string(2 * ci.complex_dim()));
  BoundaryValues out;
  for (const Monomial& c : monomial_basis(base, fiber_dim)) {
    CharacteristicMonomial cm;
    for (const Factor& f : c.factors()) {
      const std::string& name = base[f.gen].name;
      const int k = static_cast<int>(f.exp);
      if (name == "t") {
        cm.t_power += k;
      } else if (name == "e") {
        cm.e_power += k;
      } else if (name.size() > 1 && name[0] == 'p' &&
                 name.find_first_not_of("0123456789", 1) == std::string::npos) {
        const auto i = static_cast<std::size_t>(std::stoi(name.substr(1)));
        if (i == 0) throw Error(ErrorKind::invalid_argument, "no Pontryagin class p0");
        if (cm.p_powers.size() < i) cm.p_powers.resize(i, 0);
        cm.p_powers[i - 1] += k;
      } else {
        throw Error(ErrorKind::invalid_argument,
                    "cannot read '" + name + "' as a tangential class (expected t, e or p<i>)");
      }
    }
    out.emplace(c, char_number(ci, cm));
  }
  return out;
}

DerivationSpec vd_derivation_spec(int d, int max_degree) {
  const StructurePreset preset = vd_spinc_preset();
  const CompleteIntersection ci(4, {d});
  KappaAlgebra kappa = kappa_generator_set(preset, max_degree);
  BoundaryValues boundary = boundary_from_complete_intersection(*preset.base, preset.fiber_dim, ci);
  return DerivationSpec(std::move(kappa), "t", std::move(boundary));
}

DerivationSpec mg_derivation_spec(const Integer& genus, int max_degree) {
  const StructurePreset preset = vd_spinc_preset();
  const GeneratorSet& base = *preset.base;
  BoundaryValues boundary{
      {parse_monomial(base, "e"), Rational(4 - 2 * genus)},
      {parse_monomial(base, "t p1"), Rational(0)},
      {parse_monomial(base, "t^3"), Rational(0)},
  };
  return DerivationSpec(kappa_generator_set(preset, max_degree), "t", std::move(boundary));
}

GradedPolynomial apply_d3(const DerivationSpec& spec, const GradedPolynomial& p) {
  const GeneratorSet& gens = *spec.generators();
  if (p.generator_set() != spec.generators() && !(*p.generator_set() == gens))
    throw Error(ErrorKind::generator_set_mismatch, "polynomial is not in the derivation's algebra");
  GradedPolynomial out(spec.generators());
  if (p.is_zero()) return out;
  if (!p.homogeneous_degree())
    throw Error(ErrorKind::invalid_argument, "d3 is applied to homogeneous elements only");
  using Kind = DerivationSpec::GeneratorImage::Kind;
  for (const auto& [m, c] : p.terms()) {
    for (const Factor& f : m.factors()) {
      const auto& img = spec.image(f.gen);
      switch (img.kind) {
        case Kind::zero:
          break;
        case Kind::missing:
          throw Error(ErrorKind::missing_boundary_value,
                      "no boundary value for " + to_string(*spec.algebra().base, img.missing) +
                          " (needed by d3 of " + gens[f.gen].name + ")");
        case Kind::scalar: {
          auto r = substitute_factor(gens, m, f.gen, std::nullopt);
          Rational coeff = c * Rational(f.exp) * img.coefficient;
          if (r->first < 0) coeff = -coeff;
          out.add_term(r->second, coeff);
          break;
        }
        case Kind::generator: {
          auto r = substitute_factor(gens, m, f.gen, img.target);
          if (!r) break;
          Rational coeff = c * Rational(f.exp) * img.coefficient;
          if (r->first < 0) coeff = -coeff;
          out.add_term(r->second, coeff);
          break;
        }
      }
    }
  }
  return out;
}

GradedPolynomial apply_involution(const DerivationSpec& spec, const GradedPolynomial& p) {
  GradedPolynomial out(p.generator_set());
  for (const auto& [m, c] : p.terms())
    out.add_term(m, spec.involution_sign(m) > 0 ? c : Rational(-c));
  return out;
}

namespace {

void require_degree(const DerivationSpec& spec, int degree) {
  if (degree < 0) throw Error(ErrorKind::invalid_argument, "degree must be >= 0");
  if (degree > spec.max_degree())
    throw Error(ErrorKind::invalid_argument,
                "degree " + std::to_string(degree) + " exceeds the algebra's bound " +
                    std::to_string(spec.max_degree()));
}

}  // namespace

D3Matrix d3_matrix(const DerivationSpec& spec, int degree) {
  require_degree(spec, degree);
  const GeneratorSet& gens = *spec.generators();
  D3Matrix out{DegreeBasis(gens, degree), DegreeBasis(gens, degree - 2), SparseMatrix{}};
  out.matrix.rows = out.target.size();
  out.matrix.cols = out.source.size();
  out.matrix.row_data.resize(out.matrix.rows);
  for (std::size_t j = 0; j < out.source.size(); ++j) {
    const GradedPolynomial image =
        apply_d3(spec, GradedPolynomial::term(spec.generators(), out.source[j]));
    for (const auto& [m, c] : image.terms()) {
      auto row = out.target.index_of(m);
      out.matrix.row_data[*row].emplace_back(j, c);
    }
  }
  return out;
}

KernelReport kernel_report(const DerivationSpec& spec, int degree, bool involution) {
  const D3Matrix d3 = d3_matrix(spec, degree);
  KernelReport report;
  report.degree = degree;
  report.ambient_dim = d3.source.size();
  report.target_dim = d3.target.size();

  RowEchelon echelon = echelon_of(d3.matrix);
  report.image_dim = echelon.rank();
  for (const SparseVector& v : echelon.nullspace())
    report.kernel_basis.push_back(from_coordinates(spec.generators(), d3.source, v));
  report.kernel_dim = report.kernel_basis.size();

  if (involution) {
    // The involution is diagonal in the monomial basis, so the invariant part
    // of the kernel is the kernel restricted to the +1 coordinates.
    for (std::size_t j = 0; j < d3.source.size(); ++j)
      if (spec.involution_sign(d3.source[j]) < 0) echelon.insert(SparseVector{{j, Rational(1)}});
    std::vector<GradedPolynomial> invariant;
    for (const SparseVector& v : echelon.nullspace())
      invariant.push_back(from_coordinates(spec.generators(), d3.source, v));
    report.invariant_dim = invariant.size();
    report.invariant_basis = std::move(invariant);
  }
  return report;
}

std::vector<SurjectivityEntry> surjectivity_check(const DerivationSpec& spec, int max_degree) {
  require_degree(spec, max_degree);
  std::vector<std::future<SurjectivityEntry>> jobs;
  for (int k = 0; k <= max_degree; ++k)
    jobs.push_back(std::async(std::launch::async, [&spec, k] {
      const D3Matrix d3 = d3_matrix(spec, k);
      SurjectivityEntry e;
      e.degree = k;
      e.target_dim = d3.target.size();
      e.rank = rank(d3.matrix);
      e.surjective = e.rank == e.target_dim;
      return e;
    }));
  std::vector<SurjectivityEntry> out;
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

bool in_span(const std::vector<GradedPolynomial>& basis, const GradedPolynomial& p) {
  if (p.is_zero()) return true;
  const auto degree = p.homogeneous_degree();
  if (!degree) return false;
  const DegreeBasis coords(*p.generator_set(), *degree);
  RowEchelon echelon(coords.size());
  for (const auto& b : basis) {
    if (b.is_zero()) continue;
    if (b.homogeneous_degree() != degree) return false;
    echelon.insert(to_coordinates(coords, b));
  }
  return echelon.contains(to_coordinates(coords, p));
}

RelationCheck sum_of_squares_relation_check(const DerivationSpec& spec) {
  const GeneratorSet& base = *spec.algebra().base;
  const GeneratorSetPtr& gens = spec.generators();
  auto kappa = [&](std::string_view c) {
    auto idx = spec.algebra().find(parse_monomial(base, c));
    if (!idx)
      throw Error(ErrorKind::invalid_argument, "relation check needs k[" + std::string(c) + "]");
    return GradedPolynomial::term(gens, Monomial::generator(*gens, *idx));
  };
  auto boundary = spec.boundary().find(parse_monomial(base, "e"));
  if (boundary == spec.boundary().end())
    throw Error(ErrorKind::missing_boundary_value, "relation check needs the boundary value of e");
  const Rational chi = boundary->second;

  const GradedPolynomial a = kappa("t e") * kappa("p2") - kappa("t p2").scaled(chi);
  const GradedPolynomial b = kappa("t e") * kappa("p1^2") - kappa("t p1^2").scaled(chi);
  const GradedPolynomial ab = a * b;
  const GradedPolynomial a2 = a * a;
  const GradedPolynomial b2 = b * b;

  RelationCheck r;
  r.relation_holds = ab * ab == a2 * b2;
  r.factors_in_kernel = apply_d3(spec, a).is_zero() && apply_d3(spec, b).is_zero();
  r.factors_anti_invariant =
      apply_involution(spec, a) == a.scaled(-1) && apply_involution(spec, b) == b.scaled(-1);
  r.products_invariant = apply_involution(spec, ab) == ab && apply_involution(spec, a2) == a2 &&
                         apply_involution(spec, b2) == b2;
  const KernelReport degree8 = kernel_report(spec, 8, true);
  r.products_in_invariant_kernel = in_span(*degree8.invariant_basis, ab) &&
                                   in_span(*degree8.invariant_basis, a2) &&
                                   in_span(*degree8.invariant_basis, b2);
  return r;
}

}  // namespace moduli
