#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "affinetile/io.hpp"
#include "doctest.h"

using namespace tiling;

namespace {

std::string data(const std::string& name) {
  return read_file(std::string(AFFINETILE_DATA_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("spec kinds") {
  CHECK(spec_kind(data("diag-3sqrt2.json")) == "expansion");
  CHECK(spec_kind(data("figure3.json")) == "rule");
  CHECK(spec_kind(data("figure1-boundary.json")) == "boundary");
}

TEST_CASE("expansion specs load both variants") {
  ExpansionMap spectral = load_expansion_spec(data("figure1-block.json"));
  CHECK(spectral.spectral.has_value());
  CHECK_FALSE(spectral.matrix.has_value());
  CHECK(spectral.spectral->selections.size() == 1);

  ExpansionMap matrix = load_expansion_spec(
      R"({"schema":1,"type":"expansion","matrix":[["2","0"],["0","2"]]})");
  REQUIRE(matrix.matrix.has_value());
  CHECK((*matrix.matrix)(0, 0) == 2);
}

TEST_CASE("malformed input raises input_error") {
  CHECK_THROWS_AS(load_expansion_spec("not json"), input_error);
  CHECK_THROWS_AS(load_expansion_spec(R"({"schema":2,"type":"expansion","matrix":[]})"),
                  input_error);
  CHECK_THROWS_AS(load_expansion_spec(R"({"schema":1,"type":"rule","matrix":[]})"), input_error);
  CHECK_THROWS_AS(load_expansion_spec(R"({"schema":1,"type":"expansion"})"), input_error);
  CHECK_THROWS_AS(load_rule(R"({"schema":1,"type":"rule"})"), input_error);
  CHECK_THROWS_AS(read_file("/nonexistent/path.json"), input_error);
  // non-square matrix
  CHECK_THROWS_AS(
      load_expansion_spec(R"({"schema":1,"type":"expansion","matrix":[["1","0"]]})"), input_error);
}

TEST_CASE("rule files resolve embeddings by nearest root") {
  SubstitutionRule rule = load_rule(data("figure3.json"));
  REQUIRE(rule.coord_slots.size() == 2);
  auto [x1, i1] = rule.field->root(rule.coord_slots[0]).approx();
  auto [x2, i2] = rule.field->root(rule.coord_slots[1]).approx();
  CHECK(std::abs(x1 - 2.19869) < 1e-4);
  CHECK(std::abs(x2 + 1.91223) < 1e-4);
  CHECK(i1 == 0);
  CHECK(i2 == 0);
  CHECK(rule.tiles.size() == 3);
  CHECK(rule.tiles[1].children.size() == 5);
}

TEST_CASE("boundary files carry letters, vectors and words") {
  BoundarySpec spec = load_boundary_spec(data("figure3-boundary.json"));
  CHECK(spec.letters == std::vector<std::string>{"a", "b", "c"});
  CHECK(spec.psi.images[0] == parse_word("ab", 3));
  CHECK(spec.words.size() == 3);
  CHECK(spec.assign.vectors[0][0] == FieldElem(1));
}

TEST_CASE("reports are byte-identical across runs") {
  SubstitutionRule rule = load_rule(data("fibonacci.json"));
  AddressMap map = stabilized_address_map(rule);
  ExpansionOnJ e = expansion_on_J(rule, map);
  MReport rep = verify_M_properties(rule, map, e);
  std::string a = addressmap_json(rule, map, e, rep);
  // recompute everything from scratch
  SubstitutionRule rule2 = load_rule(data("fibonacci.json"));
  AddressMap map2 = stabilized_address_map(rule2);
  ExpansionOnJ e2 = expansion_on_J(rule2, map2);
  MReport rep2 = verify_M_properties(rule2, map2, e2);
  CHECK(a == addressmap_json(rule2, map2, e2, rep2));

  Patch p = expand_patch(rule, seed_patch(rule, 0), 3);
  CHECK(patch_json(rule, p) == patch_json(rule2, expand_patch(rule2, seed_patch(rule2, 0), 3)));
}

TEST_CASE("verdict and witness json carry the decision") {
  ExpansionMap phi = load_expansion_spec(data("sqrt2-1d.json"));
  EigenData ed = eigen_data(phi);
  Verdict v = check_theorem_condition(ed);
  std::string vj = verdict_json(v);
  CHECK(vj.find("\"pass\": false") != std::string::npos);
  WitnessReport w = check_growth_condition(build_companion_witness(ed), ed);
  std::string wj = witness_json(w);
  CHECK(wj.find("\"strict_max\": false") != std::string::npos);
  CHECK(wj.find("\"M\"") != std::string::npos);
}

TEST_CASE("patch json uses exact strings") {
  SubstitutionRule rule = load_rule(data("fibonacci.json"));
  Patch p = expand_patch(rule, seed_patch(rule, 0), 2);
  std::string j = patch_json(rule, p);
  CHECK(j.find("\"translation_exact\"") != std::string::npos);
  CHECK(j.find("\"level\": 2") != std::string::npos);
  // theta + 1 appears as the coefficient vector ["1", "1"]
  CHECK(j.find("\"1\",\n        \"1\"") != std::string::npos);
}

TEST_CASE("addressmap json structure") {
  SubstitutionRule rule = load_rule(data("unit-square.json"));
  AddressMap map = stabilized_address_map(rule);
  ExpansionOnJ e = expansion_on_J(rule, map);
  MReport rep = verify_M_properties(rule, map, e);
  std::string j = addressmap_json(rule, map, e, rep);
  for (const char* key : {"\"generators\"", "\"M\"", "\"char_poly\"", "\"checks\"",
                          "\"integral\"", "\"diagonalizable\"", "\"divisibility\"",
                          "\"lipschitz_diagnostic\""})
    CHECK(j.find(key) != std::string::npos);
}

TEST_CASE("polyline json round numbers") {
  std::string j = polyline_json({{0, 0}, {1.5, -2}});
  CHECK(j.find("\"1.5\"") != std::string::npos);
  CHECK(j.find("\"-2\"") != std::string::npos);
}
