#include "moduli/reproduce.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "moduli/ci_invariants.hpp"
#include "moduli/error.hpp"
#include "moduli/genus_bounds.hpp"
#include "moduli/kappa_rings.hpp"
#include "moduli/serre_kernel.hpp"
#include "moduli/torsion_tables.hpp"

namespace moduli {

namespace {

// Collects mismatches; the first few end up in the detail line.
class Tally {
 public:
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    ++checked_;
    if (got == want) return;
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    fail(os.str());
  }
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) fail(what);
  }
  CheckResult result(const std::string& summary) const {
    if (failures_.empty()) return {true, summary + " (" + std::to_string(checked_) + " assertions)"};
    std::string d = std::to_string(failures_.size()) + " of " + std::to_string(checked_) + " failed";
    for (std::size_t i = 0; i < failures_.size() && i < 3; ++i) d += "; " + failures_[i];
    return {false, d};
  }

 private:
  void fail(std::string s) { failures_.push_back(std::move(s)); }
  std::size_t checked_ = 0;
  std::vector<std::string> failures_;
};

std::ostream& operator<<(std::ostream& os, const std::vector<std::uint64_t>& v) {
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << "]";
}

CheckResult hypersurface_invariants() {
  Tally t;
  for (long d = 1; d <= 10; ++d) {
    const CompleteIntersection ci(4, {static_cast<int>(d)});
    const TangentialClassData data = tangential_data(ci);
    const Integer D = d;
    const Integer chi = D * (10 - 10 * D + 5 * D * D - D * D * D);
    const Integer b3 = D * D * D * D - 5 * D * D * D + 10 * D * D - 10 * D + 4;
    const std::string at = "d=" + std::to_string(d);
    t.expect_eq(data.euler_char, chi, at + " chi");
    t.expect_eq(data.p1_coeff, Rational(5 - D * D), at + " p1");
    t.expect_eq(data.w2_parity, static_cast<int>((5 - d) % 2 + 2) % 2, at + " w2");
    t.expect_eq(data.middle_betti, b3, at + " b3");
    t.expect_eq(dim6_exact_genus(data.middle_betti), Integer(b3 / 2), at + " genus");
    t.expect_eq(algebraic_genus(manifold_invariants(ci)), Integer(b3 / 2), at + " g^a");
  }
  return t.result("V_d in CP^4 for d = 1..10");
}

CheckResult classical_cross_checks() {
  Tally t;
  const CompleteIntersection quartic_surface(3, {4});
  t.expect_eq(signature(quartic_surface), Integer(-16), "sigma(K3)");
  t.expect_eq(euler_characteristic(quartic_surface), Integer(24), "chi(K3)");
  t.expect_eq(middle_betti(CompleteIntersection(4, {3})), Integer(10), "b3(cubic threefold)");
  // A hyperplane in CP^m is CP^{m-1}: c = (1+x)^m, p = (1+x^2)^m, chi = m,
  // sigma = 1 or 0, middle Betti number 1 or 0.
  for (int m = 2; m <= 9; ++m) {
    const CompleteIntersection plane(m, {1});
    const int k = m - 1;
    const std::string at = "CP^" + std::to_string(k);
    const TruncatedSeries c = total_chern_series(plane);
    for (int i = 0; i <= k; ++i)
      t.expect_eq(c[i], Rational(binomial(m, i)), at + " c_" + std::to_string(i));
    const TruncatedSeries p = total_pontryagin_series(plane);
    for (int i = 0; 2 * i <= k; ++i)
      t.expect_eq(p[2 * i], Rational(binomial(m, i)), at + " p_" + std::to_string(i));
    t.expect_eq(euler_characteristic(plane), Integer(m), at + " chi");
    t.expect_eq(signature(plane), Integer(k % 2 == 0 ? 1 : 0), at + " sigma");
    t.expect_eq(middle_betti(plane), Integer(k % 2 == 0 ? 1 : 0), at + " b_mid");
  }
  return t.result("K3, cubic threefold, CP^1..CP^8");
}

// Number of exponent vectors a with sum a_i w_i == target.
std::uint64_t count_weighted(const std::vector<int>& w, std::size_t i, int target) {
  if (i == w.size()) return target == 0 ? 1 : 0;
  std::uint64_t n = 0;
  for (int used = 0; used <= target; used += w[i]) n += count_weighted(w, i + 1, target - used);
  return n;
}

CheckResult generator_counts() {
  Tally t;
  constexpr int D = 20;
  for (int n = 3; n <= 5; ++n) {
    std::vector<int> weights{2 * n};
    for (int i = (n + 4) / 4; i <= n - 1; ++i) weights.push_back(4 * i);
    const KappaAlgebra kappa = kappa_generator_set(bso_cover_preset(n), D);
    std::vector<std::uint64_t> per_degree(D + 1, 0);
    for (const Generator& g : *kappa.generators) {
      t.expect(g.degree >= 1, "kappa degree must be positive");
      ++per_degree.at(g.degree);
    }
    for (int k = 1; k <= D; ++k)
      t.expect_eq(per_degree[k], count_weighted(weights, 0, k + 2 * n),
                  "n=" + std::to_string(n) + " degree " + std::to_string(k));
  }
  const KappaAlgebra n3 = kappa_generator_set(bso_cover_preset(3), 6);
  std::vector<std::uint64_t> counts(7, 0);
  for (const Generator& g : *n3.generators) ++counts[g.degree];
  t.expect_eq(counts[2], 2u, "n=3 generators in degree 2");
  t.expect_eq(counts[4], 1u, "n=3 generators in degree 4");
  t.expect_eq(counts[6], 3u, "n=3 generators in degree 6");
  const auto dims = hilbert_dims(*n3.generators, 4);
  t.expect_eq(dims[2], 2u, "n=3 free algebra degree 2");
  t.expect_eq(dims[4], 4u, "n=3 free algebra degree 4");
  return t.result("n = 3, 4, 5 against brute-force partition counts");
}

CheckResult leray_hirsch() {
  Tally t;
  constexpr int D = 16;
  for (int n = 3; n <= 6; ++n) {
    const KappaAlgebra wg = wg_closed_generator_set(n, D);
    t.expect_eq(leray_hirsch_dims(n, D), hilbert_dims(*wg.generators, D),
                "n=" + std::to_string(n));
  }
  return t.result("n = 3..6 through degree 16");
}

CheckResult vd_kernel() {
  Tally t;
  for (int d : {2, 3, 5}) {
    const std::string at = "d=" + std::to_string(d);
    const DerivationSpec spec = vd_derivation_spec(d, 10);
    const KernelReport r = kernel_report(spec, 2, false);
    t.expect_eq(r.kernel_dim, 4u, at + " degree-2 kernel");
    const auto& gens = spec.generators();
    auto k = [&](const char* c) { return GradedPolynomial::generator(gens, c); };
    const Rational a = ratio(10 - 10 * d + 5 * d * d - d * d * d, 4);
    const Rational b = ratio(5 - d * d, 2);
    const std::vector<GradedPolynomial> displayed{
        k("k[p2]"), k("k[p1^2]"), k("k[t e]") - k("k[t^4]").scaled(a),
        k("k[t^2 p1]") - k("k[t^4]").scaled(b)};
    for (const auto& p : displayed) t.expect(in_span(r.kernel_basis, p), at + " " + to_string(p) + " in kernel");
    for (const auto& p : r.kernel_basis) t.expect(in_span(displayed, p), at + " kernel inside displayed span");
    for (const auto& e : surjectivity_check(spec, 10))
      t.expect(e.surjective, at + " d3 onto degree " + std::to_string(e.degree - 2));
  }
  return t.result("d = 2, 3, 5");
}

CheckResult spinc6_example() {
  Tally t;
  const Integer g = 5;
  const DerivationSpec spec = mg_derivation_spec(g, 8);
  const KernelReport r2 = kernel_report(spec, 2, true);
  t.expect_eq(r2.kernel_dim, 4u, "degree-2 kernel");
  t.expect_eq(*r2.invariant_dim, 4u, "degree-2 invariants");
  const KernelReport r4 = kernel_report(spec, 4, true);
  t.expect_eq(r4.ambient_dim, 21u, "degree-4 ambient");
  t.expect_eq(r4.kernel_dim, 16u, "degree-4 kernel");
  t.expect_eq(*r4.invariant_dim, 12u, "degree-4 invariants");

  const auto& gens = spec.generators();
  auto k = [&](const char* c) { return GradedPolynomial::generator(gens, c); };
  const Rational chi(4 - 2 * g);
  const std::vector<GradedPolynomial> odd{
      k("k[t e]") * k("k[p2]") - k("k[t p2]").scaled(chi),
      k("k[t e]") * k("k[p1^2]") - k("k[t p1^2]").scaled(chi),
      k("k[t^3 p1]").scaled(chi) - (k("k[t^2 p1]") * k("k[t e]")).scaled(3),
      k("k[t^5]").scaled(chi) - (k("k[t^4]") * k("k[t e]")).scaled(5)};
  const std::vector<GradedPolynomial> even{k("k[p1 e]"),
                                           k("k[t e]") * k("k[t e]") - k("k[t^2 e]").scaled(chi)};
  for (const auto& p : odd) {
    t.expect(apply_d3(spec, p).is_zero(), to_string(p) + " is a cycle");
    t.expect(in_span(r4.kernel_basis, p), to_string(p) + " in kernel basis span");
    t.expect(apply_involution(spec, p) == p.scaled(-1), to_string(p) + " anti-invariant");
  }
  for (const auto& p : even) {
    t.expect(apply_d3(spec, p).is_zero(), to_string(p) + " is a cycle");
    t.expect(in_span(*r4.invariant_basis, p), to_string(p) + " in invariant kernel");
  }
  const RelationCheck rel = sum_of_squares_relation_check(spec);
  t.expect(rel.all(), "degree-16 relation check");
  return t.result("g = 5, degrees 2, 4, 8, 16");
}

// Random homogeneous element with small integer coefficients.
GradedPolynomial random_element(const DerivationSpec& spec, int degree, std::mt19937_64& rng) {
  const auto basis = monomial_basis(*spec.generators(), degree);
  GradedPolynomial p(spec.generators());
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int i = 0; i < 4; ++i) p.add_term(basis[pick(rng)], ratio(coeff(rng), 1 + (coeff(rng) + 5) % 3));
  return p;
}

CheckResult derivation_laws() {
  Tally t;
  std::mt19937_64 rng(20240611);
  std::vector<std::pair<std::string, DerivationSpec>> specs;
  for (int d : {2, 3, 5}) specs.emplace_back("V_" + std::to_string(d), vd_derivation_spec(d, 10));
  specs.emplace_back("M_5", mg_derivation_spec(5, 10));
  for (const auto& [label, spec] : specs) {
    std::uniform_int_distribution<int> half_degree(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
      const GradedPolynomial p = random_element(spec, 2 * half_degree(rng), rng);
      const GradedPolynomial q = random_element(spec, 2 * half_degree(rng), rng);
      t.expect(apply_d3(spec, p * q) == apply_d3(spec, p) * q + p * apply_d3(spec, q),
               label + " Leibniz on " + to_string(p) + " * " + to_string(q));
    }
    // d3^2 kappa_{t^m c} = m(m-1) kappa_{t^{m-2} c}, read as a boundary value
    // when t^{m-2} c sits in the fibre dimension and as zero below it.
    const KappaAlgebra& kappa = spec.algebra();
    const GeneratorSet& base = *kappa.base;
    const std::size_t t_gen = base.index_of("t");
    std::uniform_int_distribution<std::size_t> pick(0, kappa.base_monomials.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t i = pick(rng);
      const Monomial& c = kappa.base_monomials[i];
      const std::uint32_t m = c.exponent(t_gen);
      GradedPolynomial want(spec.generators());
      if (m >= 2) {
        std::vector<Factor> lowered;
        for (Factor f : c.factors()) {
          if (f.gen == t_gen) f.exp -= 2;
          lowered.push_back(f);
        }
        const Monomial rest(base, lowered);
        const Rational mm(m * (m - 1));
        if (rest.degree() > kappa.fiber_dim) {
          want = GradedPolynomial::term(spec.generators(),
                                        Monomial::generator(*spec.generators(), *kappa.find(rest)), mm);
        } else if (rest.degree() == kappa.fiber_dim) {
          want = GradedPolynomial::constant(spec.generators(), mm * spec.boundary().at(rest));
        }
      }
      const GradedPolynomial x =
          GradedPolynomial::term(spec.generators(), Monomial::generator(*spec.generators(), i));
      t.expect(apply_d3(spec, apply_d3(spec, x)) == want,
               label + " d3^2 on " + (*spec.generators())[i].name);
    }
  }
  return t.result("V_2, V_3, V_5, M_5 with 200 random inputs each");
}

CheckResult genus_formulas() {
  Tally t;
  for (int g = 0; g <= 20; ++g) {
    ManifoldInvariants w;
    w.half_dim = 3;
    w.euler_char = 2 - 2 * g;
    w.betti_below = {1, 0, 0};
    w.signature = 0;
    t.expect_eq(algebraic_genus(w), Integer(g), "g^a(W_" + std::to_string(g) + ")");
  }
  for (int n = 3; n <= 9; ++n) {
    for (int e = 0; e <= 3; ++e) {
      ManifoldInvariants w;
      w.half_dim = n;
      w.euler_char = 2 + (n % 2 == 0 ? 2 : -2) * 7;
      w.betti_below.assign(n, 0);
      w.betti_below[0] = 1;
      w.signature = 0;
      w.e_generators = e;
      const int c = (n % 2 == 0 || n == 3 || n == 7) ? e : 1 + e;
      const GenusInterval iv = genus_interval(w);
      const std::string at = "n=" + std::to_string(n) + " e=" + std::to_string(e);
      t.expect_eq(iv.upper, Integer(7), at + " upper");
      t.expect_eq(iv.slack, c, at + " width");
      t.expect_eq(iv.lower, Integer(7 - c), at + " lower");
    }
  }
  t.expect_eq(stable_range(9, true, 0).bound, Rational(3), "(9-3)/2");
  t.expect_eq(stable_range(4, false, 0).bound, Rational(0), "(4-4)/3");
  t.expect_eq(stable_range(12, true, 1).bound, Rational(3), "(12-1-5)/2");
  return t.result("W_g for g = 0..20, intervals for n = 3..9, stable ranges");
}

CheckResult hilbert_oracle() {
  Tally t;
  constexpr int D = 20;
  std::mt19937_64 rng(0x5eed1234);
  std::uniform_int_distribution<int> count(1, 6), degree(1, 8), coin(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Generator> gens;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      Generator g{"x" + std::to_string(i), degree(rng), Parity::even};
      g.parity = (g.degree % 2 == 1 || coin(rng)) ? Parity::odd : Parity::even;
      gens.push_back(g);
    }
    // Product of 1/(1 - q^d) over even and (1 + q^d) over odd generators.
    std::vector<std::uint64_t> series(D + 1, 0);
    series[0] = 1;
    for (const Generator& g : gens) {
      if (g.parity == Parity::even) {
        for (int j = g.degree; j <= D; ++j) series[j] += series[j - g.degree];
      } else {
        for (int j = D; j >= g.degree; --j) series[j] += series[j - g.degree];
      }
    }
    t.expect_eq(hilbert_dims(GeneratorSet(gens), D), series, "random set " + std::to_string(trial));
  }
  return t.result("50 random generator sets through degree 20");
}

CheckResult abelianization_tables() {
  Tally t;
  const std::vector<std::string> table{"0", "(Z/2)^2", "0", "(Z/2)^4", "Z/4", "(Z/2)^2 + Z/3", "Z/2"};
  for (int n = 1; n <= 7; ++n)
    t.expect_eq(to_string(mt_theta_pi1(n)), table[n - 1], "pi_1(MT theta_" + std::to_string(n) + ")");
  struct Row {
    std::string example;
    std::optional<std::uint64_t> p;
    std::string want;
  };
  const std::vector<Row> rows{
      {"lens", 2, "Z/2 + Z/4"},
      {"lens", 3, "Z/3 + Z/9"},
      {"lens", 5, "(Z/5)^3"},
      {"lens", 7, "(Z/7)^3"},
      {"lens", 101, "(Z/101)^3"},
      {"quaternion-Q8", std::nullopt, "(Z/2)^2 + (Z/4)^2 + Z/64"},
      {"poincare-sphere", std::nullopt, "(Z/5)^2 + Z/9 + Z/64"},
  };
  for (const Row& row : rows) {
    const GammaAbResult r = gamma_ab(row.example, row.p, Integer(7));
    const std::string at = row.example + (row.p ? " p=" + std::to_string(*row.p) : "");
    t.expect_eq(to_string(r.group), row.want, at);
    t.expect(r.group.order() && r.g_ab.order() && r.ko7.order() &&
                 *r.group.order() == *r.g_ab.order() * *r.ko7.order(),
             at + " order");
    t.expect(!r.citation.empty(), at + " citation");
  }
  return t.result("seven table entries and the lens, Q8 and Poincare sphere examples");
}

}  // namespace

const std::vector<AcceptanceCheck>& acceptance_checks() {
  static const std::vector<AcceptanceCheck> checks{
      {1, "hypersurface-invariants", "Closed forms for V_d in CP^4", hypersurface_invariants},
      {2, "classical-cross-checks", "K3, cubic threefold and linear sections", classical_cross_checks},
      {3, "generator-counts", "kappa generators for BSO(2n)<n>", generator_counts},
      {4, "leray-hirsch", "Closed W_g generators against the tensor product", leray_hirsch},
      {5, "vd-kernel", "d3 kernel and surjectivity for V_d", vd_kernel},
      {6, "spinc6-example", "Spin^c(6) example with involution", spinc6_example},
      {7, "derivation-laws", "Leibniz rule and d3 composed with itself", derivation_laws},
      {8, "genus-formulas", "Algebraic genus, intervals and stable ranges", genus_formulas},
      {9, "hilbert-oracle", "Hilbert dimensions against series products", hilbert_oracle},
      {10, "abelianization-tables", "pi_1(MT theta_n) and mapping class groups", abelianization_tables},
  };
  return checks;
}

const AcceptanceCheck& acceptance_check(const std::string& name) {
  for (const auto& c : acceptance_checks())
    if (c.name == name || std::to_string(c.id) == name) return c;
  throw Error(ErrorKind::invalid_argument, "no acceptance check named '" + name + "'");
}

CheckResult run_check(const AcceptanceCheck& check) {
  try {
    return check.run();
  } catch (const std::exception& e) {
    return {false, std::string("threw: ") + e.what()};
  }
}

}  // namespace moduli
