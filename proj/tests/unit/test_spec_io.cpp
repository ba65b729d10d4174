#include <cstdlib>
#include <variant>

#include "doctest.h"
#include "moduli/error.hpp"
#include "moduli/spec_io.hpp"

using namespace moduli;

namespace {

std::string data(const char* name) { return std::string(TEST_DATA_DIR) + "/" + name; }

Error error_of(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an error");
  return Error(ErrorKind::invalid_argument, "");
}

Rational boundary_at(const DerivationSpec& s, const char* c) {
  return s.boundary().at(parse_monomial(*s.algebra().base, c));
}

}  // namespace

TEST_CASE("a kernel spec with d takes the hypersurface characteristic numbers") {
  const SpecFile f = load_spec_file(data("vd3_kernel.json"));
  REQUIRE(std::holds_alternative<KernelSpec>(f));
  const KernelSpec& k = std::get<KernelSpec>(f);
  CHECK(k.max_degree == 4);
  CHECK(!k.involution);
  // chi(V_3) = 3 (10 - 30 + 45 - 27) = -6.
  CHECK(boundary_at(k.derivation, "e") == -6);
  CHECK(boundary_at(k.derivation, "t p1") == -12);
  CHECK(boundary_at(k.derivation, "t^3") == 3);
}

TEST_CASE("explicit boundary values") {
  const SpecFile f = load_spec_file(data("vd5_boundary_kernel.json"));
  const KernelSpec& k = std::get<KernelSpec>(f);
  CHECK(k.involution);
  CHECK(k.max_degree == 8);
  CHECK(boundary_at(k.derivation, "t p1") == -100);
  const KernelSpec half = std::get<KernelSpec>(
      parse_spec(R"({"preset":"vd-spinc","boundary":{"e":"-1/2","t p1":"4/6","t^3":"0"}})"));
  CHECK(boundary_at(half.derivation, "t p1") == ratio(2, 3));
  CHECK(half.max_degree == 8);
}

TEST_CASE("custom presets") {
  const SpecFile f = load_spec_file(data("custom_preset.json"));
  REQUIRE(std::holds_alternative<StructurePreset>(f));
  const StructurePreset& p = std::get<StructurePreset>(f);
  CHECK(p.fiber_dim == 6);
  CHECK(*p.base == *vd_spinc_preset().base);

  const Error empty = error_of(R"({"fiber_dim": 6, "generators": []})");
  CHECK(std::string(empty.what()).find("at least one generator") != std::string::npos);
  const Error odd = error_of(R"({"fiber_dim": 6, "generators": [{"name":"x","degree":3,"parity":"even"}]})");
  CHECK(std::string(odd.what()).find("generators") != std::string::npos);
  const std::string nested =
      R"({"preset": {"fiber_dim": 4, "generators": [{"name":"t","degree":2}, {"name":"a","degree":4}]},
          "boundary": {"t^2": "1", "a": "2"}, "max_degree": 4})";
  const KernelSpec k = std::get<KernelSpec>(parse_spec(nested));
  CHECK(k.derivation.fiber_dim() == 4);
}

TEST_CASE("errors name the field") {
  const Error zero = error_of(R"({"preset":"vd-spinc","boundary":{"e":"1/0"}})");
  CHECK(zero.kind() == ErrorKind::parse_error);
  CHECK(std::string(zero.what()).find("boundary.e") != std::string::npos);
  const Error bad_monomial = error_of(R"({"preset":"vd-spinc","boundary":{"q":"1"}})");
  CHECK(std::string(bad_monomial.what()).find("boundary.q") != std::string::npos);
  const Error wrong_degree = error_of(R"({"preset":"vd-spinc","boundary":{"p1":"1"}})");
  CHECK(std::string(wrong_degree.what()).find("boundary") != std::string::npos);
  const Error unknown = error_of(R"({"preset":"vd-spinc","colour":"blue"})");
  CHECK(std::string(unknown.what()).find("colour") != std::string::npos);
  CHECK(error_of(R"({"preset":"nope"})").kind() == ErrorKind::unknown_preset);
  CHECK(error_of(R"({"preset":"vd-spinc","max_degree":"8"})").kind() == ErrorKind::parse_error);
  CHECK(error_of(R"({"preset":"vd-spinc","d":3,"boundary":{}})").kind() == ErrorKind::invalid_argument);
  CHECK(error_of(R"([1,2])").kind() == ErrorKind::parse_error);
}

TEST_CASE("malformed JSON reports line and column") {
  const Error e = error_of("{\n  \"preset\": \"vd-spinc\",\n  \"boundary\": {\"e\" \"-6\"}\n}");
  CHECK(e.kind() == ErrorKind::parse_error);
  CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  CHECK(std::string(e.what()).find("column") != std::string::npos);
}

TEST_CASE("bare boundary maps") {
  const BoundaryValues b = parse_boundary_map(R"({"e":"-6","t p1":"0","t^3":"0"})", *vd_spinc_preset().base);
  CHECK(b.size() == 3);
}

TEST_CASE("size cap") {
  unsetenv("MODULI_KAPPA_MAX_DEGREE");
  CHECK(kappa_degree_cap() == 24);
  setenv("MODULI_KAPPA_MAX_DEGREE", "10", 1);
  CHECK(kappa_degree_cap() == 10);
  CHECK_THROWS_AS(check_degree_cap(11), Error);
  setenv("MODULI_KAPPA_MAX_DEGREE", "ten", 1);
  CHECK_THROWS_AS(kappa_degree_cap(), Error);
  unsetenv("MODULI_KAPPA_MAX_DEGREE");
  CHECK_NOTHROW(check_degree_cap(24));
  try {
    check_degree_cap(25);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::size_limit);
  }
  CHECK_THROWS_AS(load_spec_file(data("missing.json")), Error);
}
