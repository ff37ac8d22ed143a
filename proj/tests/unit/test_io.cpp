#include <doctest.h>

#include "examples.hpp"
#include "pmatch/io.hpp"
#include "random.hpp"

using namespace pmatch;
using namespace pmatch::testing;
using pmatch::io::json;

namespace {

std::string data(const std::string& name) { return std::string(PMATCH_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("fixtures load to the in-code examples") {
  const json v = io::read_json_file(data("example1_V.pmod"));
  CHECK(io::module_from_json(v, io::resolve_modulus(v, std::nullopt)) == example1_v());
  const json l = io::read_json_file(data("example1.lmod"));
  CHECK(io::morphism_from_json(l, PrimeModulus()) == example1_alpha());
  CHECK(io::morphism_from_json(io::read_json_file(data("example7.lmod")), PrimeModulus()) == example1_alpha(true));
  const Span s = io::span_from_json(io::read_json_file(data("early_death.span")), PrimeModulus());
  CHECK(s.alpha() == interval_span(5, 4).alpha());
  CHECK(s.beta() == interval_span(5, 4).beta());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(io::read_json_file(data("malformed.pmod")), ParseError);
  CHECK_THROWS_AS(io::read_json_file(data("does_not_exist.pmod")), ParseError);
  CHECK_THROWS_AS(io::module_from_json(json::parse(R"({"maps": []})"), PrimeModulus()), ParseError);
  CHECK_THROWS_AS(io::module_from_json(json::parse(R"({"dims": [1, "x"]})"), PrimeModulus()), ParseError);
  CHECK_THROWS_AS(io::module_from_json(json::parse(R"({"dims": [1, 1], "maps": [[[1, 0]]]})"), PrimeModulus()),
                  DimensionMismatch);
  CHECK_THROWS_AS(io::module_from_json(json::parse(R"({"dims": [1, 1], "n": 3, "maps": [[[1]]]})"), PrimeModulus()),
                  ValidationError);
  CHECK_THROWS_AS(io::morphism_from_json(io::read_json_file(data("bad_square.lmod")), PrimeModulus()),
                  ValidationError);
  CHECK_THROWS_AS(io::filtration_from_json(io::read_json_file(data("open_face.flt"))), ValidationError);
  CHECK_THROWS_AS(io::partial_map_from_json(json::parse(R"({"pairs": [[1]]})")), ParseError);
}

TEST_CASE("modulus resolution") {
  const json with_p = json::parse(R"({"p": 3, "dims": [1]})");
  CHECK(io::resolve_modulus(with_p, std::nullopt) == PrimeModulus(3));
  CHECK(io::resolve_modulus(with_p, PrimeModulus(3)) == PrimeModulus(3));
  CHECK_THROWS_AS(io::resolve_modulus(with_p, PrimeModulus(5)), ValidationError);
  CHECK(io::resolve_modulus(json::parse(R"({"dims": [1]})"), PrimeModulus(5)) == PrimeModulus(5));
  CHECK(io::resolve_modulus(json::parse(R"({"dims": [1]})"), std::nullopt) == PrimeModulus());
  CHECK_THROWS_AS(io::resolve_modulus(json::parse(R"({"p": 4})"), std::nullopt), ValidationError);
  const PersistenceModule m = io::module_from_json(json::parse(R"({"dims": [1, 1], "maps": [[[-1]]]})"), PrimeModulus(5));
  CHECK(m.maps()[0](0, 0) == 4);
}

TEST_CASE("round trips") {
  Rng rng(71);
  for (int t = 0; t < 50; ++t) {
    const PrimeModulus p(t % 2 ? 3 : 2);
    const LadderMorphism alpha = random_morphism(rng, uniform(rng, 1, 4), 3, p);
    CHECK(io::module_from_json(io::to_json(alpha.source()), p) == alpha.source());
    CHECK(io::morphism_from_json(io::to_json(alpha), p) == alpha);
    const SimplicialFiltration f = random_filtration(rng, uniform(rng, 1, 4), 10, 4);
    CHECK(io::filtration_from_json(io::to_json(f)) == f);
  }
}

TEST_CASE("text formats") {
  CHECK(io::format_barcode(barcode(example1_v())) == "[2,3] x 2\n[2,2] x 1\n");
  CHECK(io::format_matching(induced_matching(example1_alpha())) == "[2,3] -> [1,2] x 1\n[2,3] -> [2,3] x 1\n");
  CHECK(io::format_set_matching(bl_matching(example1_alpha()).sigma) == "[2,3]#1 -> [2,3]#1\n[2,3]#2 -> [1,2]#1\n");
  CHECK(io::format_enriched(enriched_matching(interval_span(5, 4))) == "[1,5] ~ [1,5] : {[1,4] x 1}\n");
  CHECK(io::format_barcode(Barcode()).empty());
  const json b = io::to_json(barcode(example1_u()));
  CHECK(b == json::parse(R"([{"interval":[1,2],"multiplicity":2},{"interval":[2,3],"multiplicity":1}])"));
}
