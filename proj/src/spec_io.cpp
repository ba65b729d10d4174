#include "moduli/spec_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "moduli/ci_invariants.hpp"
#include "moduli/error.hpp"

namespace moduli {

using nlohmann::json;

namespace {

constexpr int kDefaultCap = 24;
constexpr int kDefaultKernelDegree = 8;

[[noreturn]] void field_error(std::string_view field, const std::string& message,
                              ErrorKind kind = ErrorKind::parse_error) {
  throw Error(kind, "field '" + std::string(field) + "': " + message);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::parse_error, "malformed JSON at line " + std::to_string(line) +
                                            ", column " + std::to_string(column));
  }
}

int read_int(const json& j, std::string_view field) {
  if (!j.is_number_integer()) field_error(field, "expected an integer");
  const auto v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) field_error(field, "integer out of range");
  return static_cast<int>(v);
}

Rational read_rational(const json& j, std::string_view field) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (!j.is_string()) field_error(field, "expected a rational as a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    field_error(field, e.what());
  }
}

// Re-raises a validation failure with the field name in front.
template <class F>
auto in_field(std::string_view field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (std::string_view(e.what()).starts_with("field '")) throw;  // already located
    field_error(field, e.what(), e.kind());
  }
}

StructurePreset read_custom_preset(const json& j, std::string_view field) {
  if (!j.is_object()) field_error(field, "expected a preset name or object");
  for (const auto& [key, value] : j.items())
    if (key != "name" && key != "fiber_dim" && key != "generators" && key != "oriented")
      field_error(std::string(field) + "." + key, "unknown field");
  if (!j.contains("fiber_dim")) field_error(std::string(field) + ".fiber_dim", "missing");
  if (!j.contains("generators")) field_error(std::string(field) + ".generators", "missing");
  StructurePreset preset;
  preset.name = "custom";
  if (j.contains("name")) {
    if (!j["name"].is_string()) field_error(std::string(field) + ".name", "expected a string");
    preset.name = j["name"].get<std::string>();
  }
  preset.fiber_dim = read_int(j["fiber_dim"], std::string(field) + ".fiber_dim");
  if (j.contains("oriented")) {
    if (!j["oriented"].is_boolean())
      field_error(std::string(field) + ".oriented", "expected true or false");
    preset.oriented = j["oriented"].get<bool>();
  }
  const json& gens = j["generators"];
  const std::string gfield = std::string(field) + ".generators";
  if (!gens.is_array()) field_error(gfield, "expected an array");
  if (gens.empty())
    field_error(gfield, "at least one generator is required", ErrorKind::invalid_argument);
  std::vector<Generator> list;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string gf = gfield + "[" + std::to_string(i) + "]";
    const json& g = gens[i];
    if (!g.is_object()) field_error(gf, "expected an object");
    if (!g.contains("name") || !g["name"].is_string()) field_error(gf + ".name", "expected a string");
    if (!g.contains("degree")) field_error(gf + ".degree", "missing");
    Generator gen;
    gen.name = g["name"].get<std::string>();
    gen.degree = read_int(g["degree"], gf + ".degree");
    gen.parity = gen.degree % 2 == 0 ? Parity::even : Parity::odd;
    if (g.contains("parity")) {
      if (!g["parity"].is_string()) field_error(gf + ".parity", "expected \"even\" or \"odd\"");
      gen.parity = in_field(gf + ".parity", [&] { return parse_parity(g["parity"].get<std::string>()); });
    }
    list.push_back(std::move(gen));
  }
  preset.base = in_field(gfield, [&] { return std::make_shared<const GeneratorSet>(std::move(list)); });
  in_field(field, [&] {
    preset.validate();
    return 0;
  });
  return preset;
}

StructurePreset read_preset(const json& j, std::string_view field) {
  if (j.is_string()) {
    return in_field(field, [&] { return preset_by_name(j.get<std::string>()); });
  }
  return read_custom_preset(j, field);
}

BoundaryValues read_boundary(const json& j, const GeneratorSet& base, std::string_view field) {
  if (!j.is_object()) field_error(field, "expected an object of monomial -> rational");
  BoundaryValues out;
  for (const auto& [key, value] : j.items()) {
    const std::string f = std::string(field) + "." + key;
    const Monomial m = in_field(f, [&] { return parse_monomial(base, key); });
    if (!out.emplace(m, read_rational(value, f)).second) field_error(f, "duplicate monomial");
  }
  return out;
}

KernelSpec read_kernel_spec(const json& j) {
  for (const auto& [key, value] : j.items())
    if (key != "preset" && key != "boundary" && key != "d" && key != "involution" &&
        key != "max_degree" && key != "t_symbol")
      field_error(key, "unknown field");
  if (!j.contains("preset")) field_error("preset", "missing");
  const StructurePreset preset = read_preset(j["preset"], "preset");

  int max_degree = kDefaultKernelDegree;
  if (j.contains("max_degree")) max_degree = read_int(j["max_degree"], "max_degree");
  if (max_degree < 0) field_error("max_degree", "must be >= 0", ErrorKind::invalid_argument);
  check_degree_cap(max_degree);

  bool involution = false;
  if (j.contains("involution")) {
    if (!j["involution"].is_boolean()) field_error("involution", "expected true or false");
    involution = j["involution"].get<bool>();
  }
  std::string t_symbol = "t";
  if (j.contains("t_symbol")) {
    if (!j["t_symbol"].is_string()) field_error("t_symbol", "expected a string");
    t_symbol = j["t_symbol"].get<std::string>();
  }

  BoundaryValues boundary;
  if (j.contains("boundary") && j.contains("d"))
    field_error("d", "give either \"d\" or \"boundary\", not both", ErrorKind::invalid_argument);
  if (j.contains("boundary")) {
    boundary = read_boundary(j["boundary"], *preset.base, "boundary");
  } else if (j.contains("d")) {
    const int d = read_int(j["d"], "d");
    boundary = in_field("d", [&] {
      const CompleteIntersection ci(preset.half_dim() + 1, {d});
      return boundary_from_complete_intersection(*preset.base, preset.fiber_dim, ci);
    });
  }
  KappaAlgebra algebra = in_field("preset", [&] { return kappa_generator_set(preset, max_degree); });
  DerivationSpec spec = in_field("boundary", [&] {
    return DerivationSpec(std::move(algebra), t_symbol, std::move(boundary));
  });
  return KernelSpec{std::move(spec), involution, max_degree};
}

}  // namespace

int kappa_degree_cap() {
  const char* env = std::getenv("MODULI_KAPPA_MAX_DEGREE");
  if (!env || !*env) return kDefaultCap;
  const std::string_view s(env);
  int cap = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
  if (ec != std::errc() || ptr != s.data() + s.size() || cap < 0)
    throw Error(ErrorKind::invalid_argument,
                "MODULI_KAPPA_MAX_DEGREE must be a non-negative integer, got '" + std::string(s) + "'");
  return cap;
}

void check_degree_cap(int max_degree) {
  const int cap = kappa_degree_cap();
  if (max_degree > cap)
    throw Error(ErrorKind::size_limit,
                "degree " + std::to_string(max_degree) + " exceeds the cap " + std::to_string(cap) +
                    " (raise MODULI_KAPPA_MAX_DEGREE to allow it)");
}

SpecFile parse_spec(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw Error(ErrorKind::parse_error, "spec file must hold a JSON object");
  if (j.contains("preset") || j.contains("boundary")) return read_kernel_spec(j);
  if (j.contains("generators") || j.contains("fiber_dim")) return read_custom_preset(j, "preset");
  throw Error(ErrorKind::parse_error,
              "spec file has neither \"preset\" (kernel spec) nor \"generators\" (preset)");
}

SpecFile load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

BoundaryValues parse_boundary_map(std::string_view text, const GeneratorSet& base) {
  return read_boundary(parse_json(text), base, "boundary");
}

}  // namespace moduli
