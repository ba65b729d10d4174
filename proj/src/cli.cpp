#include "moduli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "moduli/ci_invariants.hpp"
#include "moduli/error.hpp"
#include "moduli/genus_bounds.hpp"
#include "moduli/kappa_rings.hpp"
#include "moduli/reproduce.hpp"
#include "moduli/serre_kernel.hpp"
#include "moduli/spec_io.hpp"
#include "moduli/torsion_tables.hpp"

namespace moduli {

using nlohmann::json;

namespace {

// Numbers leave the program as decimal strings so nothing is ever rounded.
json num(const Integer& z) { return z.get_str(); }
json num(const Rational& q) { return to_string(q); }
json num(long long v) { return std::to_string(v); }
json num(unsigned long long v) { return std::to_string(v); }
json num(int v) { return std::to_string(v); }
json num(unsigned long v) { return std::to_string(v); }
json num(long v) { return std::to_string(v); }
json num(unsigned v) { return std::to_string(v); }

template <class T>
json num_list(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(num(x));
  return a;
}

Integer integer_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const Error& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

// ---- plain-text rendering of the JSON results ----

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_flat_object(const json& j) {
  return j.is_object() && std::all_of(j.begin(), j.end(), [](const json& v) {
           return v.is_primitive() ||
                  (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); }));
         });
}

std::string flat_text(const json& v) {
  if (!v.is_array()) return scalar_text(v);
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + scalar_text(x);
  return s;
}

void render(const json& j, std::ostream& out, const std::string& indent);

void render_table(const json& rows, std::ostream& out, const std::string& indent) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      line.push_back(row.contains(cols[i]) ? flat_text(row[cols[i]]) : "");
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s = indent;
    for (std::size_t i = 0; i < line.size(); ++i)
      s += line[i] + std::string(width[i] - line[i].size() + (i + 1 < line.size() ? 2 : 0), ' ');
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << "\n";
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

void render(const json& j, std::ostream& out, const std::string& indent) {
  for (const auto& [key, v] : j.items()) {
    if (v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) {
                               return x.is_primitive();
                             }))) {
      out << indent << key << ": " << flat_text(v) << "\n";
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_flat_object)) {
      out << indent << key << ":\n";
      render_table(v, out, indent + "  ");
    } else if (v.is_array()) {
      out << indent << key << ":\n";
      for (const auto& x : v) {
        out << indent << "  -\n";
        render(x, out, indent + "    ");
      }
    } else {
      out << indent << key << ":\n";
      render(v, out, indent + "  ");
    }
  }
}

void emit(const json& j, bool as_json, std::ostream& out) {
  if (as_json) {
    out << j.dump(2) << "\n";
  } else {
    render(j, out, "");
  }
}

// ---- subcommands ----

json ci_command(int ambient, const std::vector<int>& degrees) {
  const CompleteIntersection ci(ambient, degrees);
  const TangentialClassData d = tangential_data(ci);
  json j;
  j["ambient"] = num(ambient);
  j["degrees"] = num_list(degrees);
  j["complex_dim"] = num(ci.complex_dim());
  j["total_degree"] = num(ci.total_degree());
  j["euler_char"] = num(d.euler_char);
  j["signature"] = num(d.signature);
  j["p1_coeff"] = num(d.p1_coeff);
  j["e_coeff"] = num(d.e_coeff);
  j["w2_parity"] = num(d.w2_parity);
  j["middle_betti"] = num(d.middle_betti);
  j["chern_coeffs"] = num_list(d.chern_coeffs);
  j["pontryagin_coeffs"] = num_list(d.pontryagin_coeffs);
  j["algebraic_genus"] = num(algebraic_genus(manifold_invariants(ci)));
  if (ci.complex_dim() == 3) j["genus"] = num(dim6_exact_genus(d.middle_betti));
  return j;
}

json stable_range_json(const StableRange& r) {
  return json{{"bound", num(r.bound)}, {"floor", num(r.floor)}, {"rule", r.rule}};
}

json genus_command(const ManifoldInvariants& inv) {
  json j;
  const Integer ga = algebraic_genus(inv);
  j["algebraic_genus"] = num(ga);
  if (inv.half_dim > 2) {
    const GenusInterval iv = genus_interval(inv);
    j["interval"] = json{{"lower", num(iv.lower)}, {"upper", num(iv.upper)}, {"c", num(iv.slack)}};
    if (iv.lower >= 0)
      j["stable_range"] = stable_range_json(stable_range(iv.lower, inv.spherical, inv.hirsch_length));
  } else {
    j["interval"] = nullptr;
  }
  return j;
}

json generators_json(const KappaAlgebra& kappa) {
  json a = json::array();
  for (std::size_t i = 0; i < kappa.generators->size(); ++i) {
    const Generator& g = (*kappa.generators)[i];
    a.push_back(json{{"name", g.name},
                     {"degree", num(g.degree)},
                     {"parity", std::string(to_string(g.parity))},
                     {"base", to_string(*kappa.base, kappa.base_monomials[i])}});
  }
  return a;
}

json base_json(const GeneratorSet& base) {
  json a = json::array();
  for (const Generator& g : base)
    a.push_back(json{{"name", g.name}, {"degree", num(g.degree)}, {"parity", std::string(to_string(g.parity))}});
  return a;
}

struct RingOptions {
  std::string preset;
  std::string spec_file;
  int max_degree = 8;
  std::optional<std::string> genus;
  bool spherical = false;
  bool closed_wg = false;
};

StructurePreset preset_from_file(const std::string& path) {
  SpecFile f = load_spec_file(path);
  if (auto* p = std::get_if<StructurePreset>(&f)) return *p;
  throw Error(ErrorKind::invalid_argument, path + " is a kernel spec, not a preset");
}

json ring_command(const RingOptions& o) {
  check_degree_cap(o.max_degree);
  const StructurePreset preset = o.spec_file.empty() ? preset_by_name(o.preset) : preset_from_file(o.spec_file);
  preset.validate();
  json j;
  j["preset"] = preset.name;
  j["fiber_dim"] = num(preset.fiber_dim);
  j["max_degree"] = num(o.max_degree);
  j["base"] = base_json(*preset.base);
  j["warnings"] = preset.warnings();

  std::optional<Integer> genus;
  if (o.genus) genus = integer_flag("--genus", *o.genus);

  if (o.closed_wg) {
    const int n = preset.half_dim();
    if (preset.name != "bso-cover(" + std::to_string(n) + ")")
      throw Error(ErrorKind::invalid_argument, "--closed-wg needs a bso-cover(n) preset");
    const KappaAlgebra wg = wg_closed_generator_set(n, o.max_degree);
    const auto dims = hilbert_dims(*wg.generators, o.max_degree);
    const auto lh = leray_hirsch_dims(n, o.max_degree);
    j["generators"] = generators_json(wg);
    j["dimensions"] = num_list(dims);
    j["leray_hirsch_dimensions"] = num_list(lh);
    j["leray_hirsch_agrees"] = dims == lh;
    return j;
  }

  const KappaAlgebra kappa = kappa_generator_set(preset, o.max_degree);
  j["generators"] = generators_json(kappa);
  if (genus) {
    json rows = json::array();
    for (const StableDegree& s : stable_cohomology_dims(preset, *genus, o.spherical, o.max_degree))
      rows.push_back(json{{"degree", num(s.degree)},
                          {"dimension", num(s.dimension)},
                          {"in_stable_range", s.in_stable_range}});
    j["dimensions"] = rows;
    j["genus"] = num(*genus);
    j["stable_range"] = stable_range_json(stable_range(*genus, o.spherical, 0));
  } else {
    j["dimensions"] = num_list(hilbert_dims(*kappa.generators, o.max_degree));
  }
  return j;
}

struct KernelOptions {
  std::optional<std::string> preset;
  std::optional<int> d;
  std::string boundary_file;
  bool involution = false;
  std::optional<int> max_degree;
  bool basis = false;
};

json polys_json(const std::vector<GradedPolynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p));
  return a;
}

KernelSpec kernel_spec_from(const KernelOptions& o) {
  const int max_degree = o.max_degree.value_or(8);
  const StructurePreset preset = preset_by_name(o.preset.value_or("vd-spinc"));
  BoundaryValues boundary;
  if (!o.boundary_file.empty()) {
    // Either a whole kernel spec or a bare boundary map over --preset.
    std::ifstream in(o.boundary_file, std::ios::binary);
    if (!in) throw Error(ErrorKind::invalid_argument, "cannot read " + o.boundary_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    json probe = json::parse(buf.str(), nullptr, false);
    if (probe.is_object() && probe.contains("preset")) {
      if (o.preset) throw CLI::ValidationError("--preset", "the boundary file already names a preset");
      if (o.max_degree) probe["max_degree"] = *o.max_degree;
      if (o.involution) probe["involution"] = true;
      return std::get<KernelSpec>(parse_spec(probe.dump()));
    }
    boundary = parse_boundary_map(buf.str(), *preset.base);
  } else if (o.d) {
    const CompleteIntersection ci(preset.half_dim() + 1, {*o.d});
    boundary = boundary_from_complete_intersection(*preset.base, preset.fiber_dim, ci);
  }
  check_degree_cap(max_degree);
  return KernelSpec{DerivationSpec(kappa_generator_set(preset, max_degree), "t", std::move(boundary)),
                    o.involution, max_degree};
}

json kernel_command(const KernelOptions& o) {
  const KernelSpec spec = kernel_spec_from(o);
  const DerivationSpec& d3 = spec.derivation;
  const GeneratorSet& base = *d3.algebra().base;
  json j;
  j["max_degree"] = num(spec.max_degree);
  j["fiber_dim"] = num(d3.fiber_dim());
  j["involution"] = spec.involution;
  json boundary = json::object();
  for (const auto& [m, v] : d3.boundary()) boundary[to_string(base, m)] = num(v);
  j["boundary"] = boundary;
  j["generators"] = generators_json(d3.algebra());

  const auto surjectivity = surjectivity_check(d3, spec.max_degree);
  json rows = json::array();
  for (int k = 0; k <= spec.max_degree; ++k) {
    const KernelReport r = kernel_report(d3, k, spec.involution);
    json row{{"degree", num(k)},
             {"ambient_dim", num(r.ambient_dim)},
             {"target_dim", num(r.target_dim)},
             {"kernel_dim", num(r.kernel_dim)},
             {"image_dim", num(r.image_dim)},
             {"surjective", surjectivity[k].surjective}};
    if (r.invariant_dim) row["invariant_dim"] = num(*r.invariant_dim);
    if (o.basis) {
      row["kernel_basis"] = polys_json(r.kernel_basis);
      if (r.invariant_basis) row["invariant_basis"] = polys_json(*r.invariant_basis);
    }
    rows.push_back(std::move(row));
  }
  j["degrees"] = rows;
  return j;
}

struct AbelianizationOptions {
  std::string example;
  std::optional<std::uint64_t> p;
  std::optional<int> n;
  std::optional<std::string> genus;
};

json group_json(const FinAbGroup& g) {
  json j{{"group", to_string(g)}, {"factors", num_list(g.factors())}};
  const auto order = g.order();
  j["order"] = order ? num(*order) : json("infinite");
  return j;
}

json abelianization_command(const AbelianizationOptions& o) {
  json j;
  if (o.example == "mt-theta") {
    if (!o.n) throw CLI::ValidationError("--n", "mt-theta needs --n");
    j = group_json(mt_theta_pi1(*o.n));
    j["example"] = "mt-theta";
    j["n"] = num(*o.n);
    j["citation"] = "pi_1 of MT theta_n, tabulated";
    return j;
  }
  if (o.n) throw CLI::ValidationError("--n", "--n applies to mt-theta only");
  std::optional<Integer> genus;
  if (o.genus) genus = integer_flag("--genus", *o.genus);
  const GammaAbResult r = gamma_ab(o.example, o.p, genus);
  j = group_json(r.group);
  j["example"] = r.example;
  if (o.p) j["p"] = num(*o.p);
  j["g_ab"] = to_string(r.g_ab);
  j["ko7"] = to_string(r.ko7);
  j["hirsch_length"] = num(r.hirsch_length);
  j["genus_hypothesis"] = "g >= " + std::to_string(7 + r.hirsch_length);
  j["citation"] = r.citation;
  return j;
}

json reproduce_command(bool all, const std::vector<std::string>& names, bool& all_passed) {
  std::vector<const AcceptanceCheck*> selected;
  if (all || names.empty()) {
    for (const auto& c : acceptance_checks()) selected.push_back(&c);
  } else {
    for (const auto& n : names) selected.push_back(&acceptance_check(n));
  }
  json rows = json::array();
  all_passed = true;
  for (const AcceptanceCheck* c : selected) {
    const CheckResult r = run_check(*c);
    all_passed = all_passed && r.passed;
    rows.push_back(json{{"id", num(c->id)},
                        {"name", c->name},
                        {"status", r.passed ? "PASS" : "FAIL"},
                        {"detail", r.detail}});
  }
  return json{{"checks", rows}, {"all_passed", all_passed}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable cohomology of moduli spaces of manifolds, computed exactly.", "moduli"};
  app.require_subcommand(1);
  bool as_json = false;
  std::function<json()> action;

  auto* ci = app.add_subcommand("ci", "Invariants of a complete intersection in CP^m");
  int ambient = 0;
  std::vector<int> degrees;
  ci->add_option("--ambient", ambient, "Ambient projective dimension m")->required();
  ci->add_option("--degrees", degrees, "Comma-separated multidegree")->required()->delimiter(',');
  ci->add_flag("--json", as_json, "Emit JSON");
  ci->callback([&] { action = [&] { return ci_command(ambient, degrees); }; });

  auto* genus = app.add_subcommand("genus", "Genus bounds and stable range of a 2n-manifold");
  ManifoldInvariants inv;
  std::string chi, sigma = "0";
  std::vector<std::string> betti;
  genus->add_option("--n", inv.half_dim, "Half dimension n")->required();
  genus->add_option("--chi", chi, "Euler characteristic")->required();
  genus->add_option("--betti", betti, "b_0,...,b_{n-1}")->required()->delimiter(',');
  genus->add_option("--sigma", sigma, "Signature (0 for odd n)");
  genus->add_option("--e-gens", inv.e_generators, "Minimal number of generators of H_n(B;Z)");
  genus->add_option("--hirsch", inv.hirsch_length, "Hirsch length of the fundamental group");
  genus->add_flag("--spherical", inv.spherical, "Use the spherical stable range");
  genus->add_flag("--json", as_json, "Emit JSON");
  genus->callback([&] {
    inv.euler_char = integer_flag("--chi", chi);
    inv.signature = integer_flag("--sigma", sigma);
    for (const auto& b : betti) inv.betti_below.push_back(integer_flag("--betti", b));
    inv.n_connected_asserted = true;
    action = [&] { return genus_command(inv); };
  });

  auto* ring = app.add_subcommand("ring", "kappa-class generators and stable Hilbert dimensions");
  RingOptions ro;
  auto* preset_opt = ring->add_option("--preset", ro.preset, "vd-spinc or bso-cover(n)");
  auto* file_opt = ring->add_option("--spec-file", ro.spec_file, "Custom preset JSON")->check(CLI::ExistingFile);
  preset_opt->excludes(file_opt);
  ring->add_option("--max-degree", ro.max_degree, "Highest cohomological degree of the moduli space");
  ring->add_option("--genus", ro.genus, "Flag degrees inside the stable range for this genus");
  ring->add_flag("--spherical", ro.spherical, "Use the spherical stable range");
  ring->add_flag("--closed-wg", ro.closed_wg, "Generators for closed W_g (bso-cover presets)");
  ring->add_flag("--json", as_json, "Emit JSON");
  ring->callback([&] {
    if (ro.preset.empty() && ro.spec_file.empty())
      throw CLI::RequiredError("--preset or --spec-file");
    if (ro.max_degree < 0) throw CLI::ValidationError("--max-degree", "must be >= 0");
    action = [&] { return ring_command(ro); };
  });

  auto* kernel = app.add_subcommand("kernel", "Kernel of d3 on the kappa-class algebra");
  KernelOptions ko;
  kernel->add_option("--preset", ko.preset, "Structure preset (default vd-spinc)");
  auto* d_opt = kernel->add_option("--d", ko.d, "Boundary values of the degree-d hypersurface");
  auto* bf_opt = kernel->add_option("--boundary-file", ko.boundary_file, "Kernel spec or boundary map JSON")
                     ->check(CLI::ExistingFile);
  d_opt->excludes(bf_opt);
  kernel->add_flag("--involution", ko.involution, "Also report invariants under t -> -t");
  kernel->add_option("--max-degree", ko.max_degree, "Highest cohomological degree of the moduli space");
  kernel->add_flag("--basis", ko.basis, "Print kernel bases");
  kernel->add_flag("--json", as_json, "Emit JSON");
  kernel->callback([&] {
    if (ko.max_degree && *ko.max_degree < 0) throw CLI::ValidationError("--max-degree", "must be >= 0");
    action = [&] { return kernel_command(ko); };
  });

  auto* ab = app.add_subcommand("abelianization", "Abelianized mapping class groups and pi_1(MT theta_n)");
  AbelianizationOptions ao;
  ab->add_option("--example", ao.example, "lens, quaternion-Q8, poincare-sphere or mt-theta")->required();
  ab->add_option("--p", ao.p, "Prime order of the lens space group");
  ab->add_option("--n", ao.n, "n for mt-theta");
  ab->add_option("--genus", ao.genus, "Check the genus hypothesis g >= 7 + h");
  ab->add_flag("--json", as_json, "Emit JSON");
  ab->callback([&] { action = [&] { return abelianization_command(ao); }; });

  auto* rep = app.add_subcommand("reproduce", "Run the acceptance checks");
  bool rep_all = false;
  std::vector<std::string> rep_names;
  bool all_passed = true;
  auto* all_opt = rep->add_flag("--all", rep_all, "Run every check");
  auto* name_opt = rep->add_option("--name", rep_names, "Check name or number (repeatable)");
  all_opt->excludes(name_opt);
  rep->add_flag("--json", as_json, "Emit JSON");
  rep->callback([&] { action = [&] { return reproduce_command(rep_all, rep_names, all_passed); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    const json result = action();
    emit(result, as_json, out);
    return all_passed ? 0 : 1;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return 2;
  } catch (const Error& e) {
    const std::string category(to_string(e.kind()));
    if (as_json) {
      out << json{{"error", {{"category", category}, {"message", e.what()}}}}.dump(2) << "\n";
    }
    err << "error [" << category << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error [internal]: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace moduli
