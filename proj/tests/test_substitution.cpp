#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "affinetile/io.hpp"
#include "doctest.h"

using namespace tiling;

namespace {

SubstitutionRule load(const std::string& name) {
  return load_rule(read_file(std::string(AFFINETILE_DATA_DIR) + "/" + name));
}

IntMat im(size_t n, std::initializer_list<long> v) {
  std::vector<Int> c;
  for (long x : v) c.emplace_back(x);
  return IntMat(n, n, std::move(c));
}

}  // namespace

TEST_CASE("subdivision matrices of the bundled rules") {
  CHECK(subdivision_matrix(load("figure1.json")) == im(3, {0, 1, 0, 0, 0, 1, 1, 0, 1}));
  CHECK(subdivision_matrix(load("figure3.json")) == im(3, {0, 1, 1, 0, 4, 1, 3, 0, 0}));
  CHECK(subdivision_matrix(load("fibonacci.json")) == im(2, {1, 1, 1, 0}));
  CHECK(subdivision_matrix(load("unit-square.json")) == im(1, {4}));
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(subdivision_matrix(load("figure3.json"))));
  CHECK(is_primitive(subdivision_matrix(load("figure1.json"))));
  CHECK_FALSE(is_primitive(IntMat::identity(2)));
  CHECK_FALSE(is_primitive(im(2, {0, 1, 1, 0})));  // period two
}

TEST_CASE("volume consistency within 1e-9") {
  for (const char* name : {"figure1.json", "figure3.json", "fibonacci.json", "unit-square.json"}) {
    VolumeReport r = volume_consistency(load(name));
    CHECK(r.consistent);
    CHECK(std::abs(r.pf_eigenvalue - r.abs_det) < 1e-9);
  }
  // independent oracles
  CHECK(std::abs(volume_consistency(load("figure3.json")).pf_eigenvalue - 4.2044015505) < 1e-8);
  CHECK(std::abs(volume_consistency(load("figure1.json")).pf_eigenvalue - 1.4655712319) < 1e-8);
  CHECK(volume_consistency(load("unit-square.json")).abs_det == 4.0);
}

TEST_CASE("fibonacci level-2 patch by hand") {
  SubstitutionRule rule = load("fibonacci.json");
  Patch p = expand_patch(rule, seed_patch(rule, 0), 2);
  REQUIRE(p.tiles.size() == 3);
  CHECK(p.level == 2);
  const NumberField* f = rule.field.get();
  FieldElem theta = FieldElem::theta(f);
  // phi^2(a) = {a at 0, b at theta, a at theta + 1}
  CHECK(p.tiles[0].type == 0);
  CHECK(p.tiles[0].translation[0] == FieldElem(0));
  CHECK(p.tiles[1].type == 1);
  CHECK(p.tiles[1].translation[0] == theta);
  CHECK(p.tiles[2].type == 0);
  CHECK(p.tiles[2].translation[0] == theta + FieldElem(1));
}

TEST_CASE("expanding zero levels is the identity") {
  SubstitutionRule rule = load("figure3.json");
  Patch seed = seed_patch(rule, 1);
  Patch same = expand_patch(rule, seed, 0);
  CHECK(same.tiles.size() == 1);
  CHECK(same.level == 0);
  CHECK(same.tiles[0] == seed.tiles[0]);
}

TEST_CASE("patch counts match subdivision-matrix powers") {
  for (const char* name : {"figure1.json", "figure3.json", "fibonacci.json", "unit-square.json"}) {
    SubstitutionRule rule = load(name);
    IntMat m = subdivision_matrix(rule);
    for (int k = 0; k <= (rule.tiles.size() > 2 ? 5 : 6); ++k) {
      IntMat mk = mat_pow(m, static_cast<unsigned long>(k));
      for (size_t i = 0; i < rule.tiles.size(); ++i) {
        Patch p = expand_patch(rule, seed_patch(rule, i), k);
        std::vector<Int> counts(rule.tiles.size(), Int(0));
        for (const auto& t : p.tiles) counts[t.type] += 1;
        for (size_t j = 0; j < counts.size(); ++j) CHECK(counts[j] == mk(i, j));
      }
    }
  }
}

TEST_CASE("expansion levels compose") {
  SubstitutionRule rule = load("figure3.json");
  Patch a = expand_patch(rule, expand_patch(rule, seed_patch(rule, 2), 2), 1);
  Patch b = expand_patch(rule, seed_patch(rule, 2), 3);
  REQUIRE(a.tiles.size() == b.tiles.size());
  for (size_t i = 0; i < a.tiles.size(); ++i) CHECK(a.tiles[i] == b.tiles[i]);
}

TEST_CASE("control points satisfy the fixed-point identity") {
  for (const char* name : {"figure1.json", "figure3.json", "fibonacci.json", "unit-square.json"}) {
    SubstitutionRule rule = load(name);
    auto c = control_points(rule);
    for (size_t i = 0; i < rule.tiles.size(); ++i) {
      const auto& [sigma, d] = rule.tiles[i].children[rule.tiles[i].control_child];
      std::vector<FieldElem> lhs = apply_expansion(rule, c[i]);
      for (size_t k = 0; k < lhs.size(); ++k) CHECK(lhs[k] == c[sigma][k] + d[k]);
    }
  }
}

TEST_CASE("fibonacci control points are zero") {
  auto c = control_points(load("fibonacci.json"));
  CHECK(c[0][0] == FieldElem(0));
  CHECK(c[1][0] == FieldElem(0));
}

TEST_CASE("control-point set is forward invariant") {
  CHECK(verify_control_invariance(load("fibonacci.json"), 3));
  CHECK(verify_control_invariance(load("unit-square.json"), 2));
  CHECK(verify_control_invariance(load("figure3.json"), 2));
  CHECK(verify_control_invariance(load("figure1.json"), 3));
}

TEST_CASE("pf eigenvalue is simple and dominant for primitive rules") {
  SubstitutionRule rule = load("figure3.json");
  IntMat m = subdivision_matrix(rule);
  RatPoly cp = char_poly(to_rat(m));
  auto boxes = isolate_roots(clear_denominators(radical(cp)), Rat(1, 1 << 16));
  std::vector<RealAlg> mags;
  for (auto& b : boxes) mags.push_back(modulus_squared(b));
  size_t arg = 0;
  for (size_t i = 1; i < mags.size(); ++i)
    if (compare_exact(mags[i], mags[arg]) > 0) arg = i;
  for (size_t i = 0; i < mags.size(); ++i)
    if (i != arg) CHECK(compare_exact(mags[arg], mags[i]) == 1);
  CHECK(boxes[arg].is_real());
}

TEST_CASE("duplicate children are rejected") {
  SubstitutionRule rule = load("fibonacci.json");
  rule.tiles[1].children.push_back(rule.tiles[1].children[0]);  // b -> {a at 0, a at 0}
  CHECK_THROWS_AS(expand_patch(rule, seed_patch(rule, 1), 1), input_error);
}

TEST_CASE("rule validation catches bad indices") {
  SubstitutionRule rule = load("fibonacci.json");
  rule.tiles[0].control_child = 9;
  CHECK_THROWS_AS(rule.validate(), input_error);
}
