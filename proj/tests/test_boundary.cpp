#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "affinetile/io.hpp"
#include "doctest.h"

using namespace tiling;

namespace {

BoundarySpec load(const std::string& name) {
  return load_boundary_spec(read_file(std::string(AFFINETILE_DATA_DIR) + "/" + name));
}

Word random_word(std::mt19937& rng, size_t num_letters, size_t len) {
  Word w;
  for (size_t i = 0; i < len; ++i) {
    int letter = 1 + static_cast<int>(rng() % num_letters);
    w.push_back(rng() % 2 ? letter : -letter);
  }
  return w;
}

}  // namespace

TEST_CASE("reduction") {
  CHECK(reduce({1, 2, -2, 3}) == Word{1, 3});
  CHECK(reduce({1, -1}).empty());
  CHECK(reduce({1, 3, -1, -3}) == Word{1, 3, -1, -3});
  CHECK(reduce({1, 2, -2, -1, 2}) == Word{2});
  CHECK_THROWS_AS(reduce({1, 0}), input_error);
}

TEST_CASE("word parsing and printing") {
  CHECK(parse_word("acAC", 3) == Word{1, 3, -1, -3});
  CHECK(parse_word("[a,c]", 3) == Word{1, 3, -1, -3});
  CHECK(parse_word("A[a,b]a", 3) == Word{2, -1, -2, 1});  // parsed words are reduced
  CHECK(word_to_string(Word{1, 3, -1, -3}) == "acAC");
  CHECK(word_to_string(Word{}) == "1");
  CHECK_THROWS_AS(parse_word("ad", 3), input_error);
  CHECK_THROWS_AS(parse_word("[ac]", 3), input_error);
}

TEST_CASE("figure 1 caption word identities") {
  BoundarySpec spec = load("figure1-boundary.json");
  const Endomorphism& psi = spec.psi;
  CHECK(apply_endo(psi, parse_word("[a,c]", 3)) == parse_word("A[a,b]a", 3));
  CHECK(apply_endo(psi, parse_word("[a,b]", 3)) == parse_word("[b,c]", 3));
  CHECK(apply_endo(psi, parse_word("[b,c]", 3)) == parse_word("A[a,c]aAB[b,c]ba", 3));
}

TEST_CASE("homomorphism and equivariance properties") {
  BoundarySpec spec = load("figure1-boundary.json");
  std::mt19937 rng(23);
  IntMat a_psi = endo_matrix(spec.psi);
  for (int i = 0; i < 300; ++i) {
    Word u = random_word(rng, 3, rng() % 12);
    Word v = random_word(rng, 3, rng() % 12);
    CHECK(reduce(u) == reduce(reduce(u)));  // idempotent
    CHECK(apply_endo(spec.psi, concat(u, v)) ==
          concat(apply_endo(spec.psi, u), apply_endo(spec.psi, v)));
    std::vector<Int> lhs = abelianization(apply_endo(spec.psi, u), 3);
    std::vector<Int> rhs = a_psi * abelianization(u, 3);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("closedness is preserved by the endomorphism") {
  BoundarySpec spec = load("figure3-boundary.json");
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    Word u = random_word(rng, 3, rng() % 10);
    Word w = concat(u, inverse_word(u));  // trivially closed
    Word comm = parse_word("[a,c]", 3);
    for (const Word& base : {w, comm}) {
      std::vector<Int> ab = abelianization(apply_endo(spec.psi, base), 3);
      std::vector<Int> ab0 = abelianization(base, 3);
      bool closed0 = std::all_of(ab0.begin(), ab0.end(), [](const Int& v) { return v == 0; });
      bool closed1 = std::all_of(ab.begin(), ab.end(), [](const Int& v) { return v == 0; });
      if (closed0) CHECK(closed1);
    }
  }
}

TEST_CASE("compatibility encodes the defining relations") {
  BoundarySpec f1 = load("figure1-boundary.json");
  CHECK(check_compatibility(f1.assign, f1.psi));
  BoundarySpec f3 = load("figure3-boundary.json");
  CHECK(check_compatibility(f3.assign, f3.psi));
  // breaking one vector breaks compatibility
  f1.assign.vectors[2][0] += FieldElem(1);
  CHECK_FALSE(check_compatibility(f1.assign, f1.psi));
}

TEST_CASE("boundary curves close exactly at every iteration count") {
  BoundarySpec f1 = load("figure1-boundary.json");
  for (int n : {0, 1, 4, 8})
    for (const char* w : {"[a,c]", "[a,b]", "[b,c]"}) {
      auto curve = boundary_curve(f1.assign, f1.psi, parse_word(w, 3), n);
      CHECK(curve.size() >= 5);
      CHECK(curve.front().first == doctest::Approx(curve.back().first));
    }
  BoundarySpec f3 = load("figure3-boundary.json");
  for (const char* w : {"[b,a]", "[b,c]", "[a,c]"})
    CHECK(boundary_curve(f3.assign, f3.psi, parse_word(w, 3), 6).size() > 100);
}

TEST_CASE("level-0 parallelogram for [a,b]") {
  BoundarySpec f1 = load("figure1-boundary.json");
  auto curve = boundary_curve(f1.assign, f1.psi, parse_word("[a,b]", 3), 0);
  REQUIRE(curve.size() == 5);
  // path 0, 1, 1+lambda, lambda, 0
  CHECK(curve[0] == std::pair<double, double>{0, 0});
  CHECK(curve[1].first == doctest::Approx(1.0));
  CHECK(curve[2].first == doctest::Approx(1.3411639));
  CHECK(curve[2].second == doctest::Approx(1.1615414));
  CHECK(curve[3].first == doctest::Approx(0.3411639));
}

TEST_CASE("non-closed words are rejected") {
  BoundarySpec f1 = load("figure1-boundary.json");
  CHECK_THROWS_AS(boundary_curve(f1.assign, f1.psi, parse_word("ab", 3), 3), math_error);
}

TEST_CASE("budget guard trips on exponential growth") {
  BoundarySpec f3 = load("figure3-boundary.json");
  Word w = parse_word("[b,c]", 3);
  for (int i = 0; i < 30; ++i) {
    try {
      w = apply_endo(f3.psi, w, 100000);
    } catch (const math_error&) {
      return;  // guard fired as intended
    }
  }
  FAIL("budget guard never fired");
}

TEST_CASE("svg output is well formed") {
  BoundarySpec f1 = load("figure1-boundary.json");
  auto c1 = boundary_curve(f1.assign, f1.psi, parse_word("[a,c]", 3), 5);
  auto c2 = boundary_curve(f1.assign, f1.psi, parse_word("[a,b]", 3), 5);
  std::string svg = svg_document({c1, c2});
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("viewBox") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  size_t paths = 0, pos = 0;
  while ((pos = svg.find("<path", pos)) != std::string::npos) ++paths, ++pos;
  CHECK(paths == 2);
}
