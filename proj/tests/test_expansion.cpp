#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "affinetile/expansion.hpp"
#include "doctest.h"

using namespace tiling;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

ExpansionMap spectral(std::initializer_list<SpectralSelection> sels) {
  ExpansionMap phi;
  phi.spectral = SpectralSpec{sels};
  return phi;
}

const SpectralSelection kSqrt2{ip({-2, 0, 1}), {1.41421356, 0}, 1};
const SpectralSelection kMinusSqrt2{ip({-2, 0, 1}), {-1.41421356, 0}, 1};

}  // namespace

TEST_CASE("eigen_data from a rational matrix") {
  RatMat two_i = RatMat::identity(2);
  two_i(0, 0) = 2;
  two_i(1, 1) = 2;
  EigenData ed = eigen_data(ExpansionMap{two_i, {}});
  REQUIRE(ed.values.size() == 1);
  CHECK(ed.values[0].multiplicity == 2);
  CHECK(ed.values[0].algebraic_integer);
  CHECK(ed.dimension() == 2);
}

TEST_CASE("eigen_data rotation-scaling matrix") {
  RatMat rot(2, 2);
  rot(0, 1) = -2;
  rot(1, 0) = 2;
  EigenData ed = eigen_data(ExpansionMap{rot, {}});  // eigenvalues +-2i
  REQUIRE(ed.values.size() == 2);
  CHECK(to_rat(ip({4, 0, 1})) == ed.values[0].min_poly);
  CHECK(ed.dimension() == 2);
}

TEST_CASE("non-expanding and non-diagonalizable rejections") {
  RatMat fib(2, 2);
  fib(0, 1) = 1;
  fib(1, 0) = 1;
  fib(1, 1) = 1;  // eigenvalue -0.618 inside the unit circle
  CHECK_THROWS_AS(eigen_data(ExpansionMap{fib, {}}), math_error);
  RatMat jordan(2, 2);
  jordan(0, 0) = 3;
  jordan(0, 1) = 1;
  jordan(1, 1) = 3;
  CHECK_THROWS_AS(eigen_data(ExpansionMap{jordan, {}}), input_error);
}

TEST_CASE("spectral specs count complex selections as dimension two") {
  EigenData ed = eigen_data(spectral({{ip({1, 1, 0, 1}), {0.3411639, 1.1615414}, 1}}));
  REQUIRE(ed.values.size() == 2);  // the conjugate is implicit
  CHECK(ed.dimension() == 2);
}

TEST_CASE("perron classification") {
  auto single = [](const ExpansionMap& phi) { return eigen_data(phi).values[0]; };
  // real root of x^3 - x^2 - 1
  CHECK(classify_perron(single(spectral({{ip({-1, 0, -1, 1}), {1.4655712, 0}, 1}}))) ==
        PerronClass::Perron);
  // complex root of x^3 + x + 1
  CHECK(classify_perron(single(spectral({{ip({1, 1, 0, 1}), {0.3411639, 1.1615414}, 1}}))) ==
        PerronClass::ComplexPerron);
  CHECK(classify_perron(single(spectral({kSqrt2}))) == PerronClass::Neither);
}

TEST_CASE("the six theorem verdicts") {
  auto verdict = [](const ExpansionMap& phi) {
    return check_theorem_condition(eigen_data(phi)).pass;
  };
  CHECK(verdict(spectral({{ip({7, -6, 1}), {4.4142135, 0}, 2}, {ip({7, -6, 1}), {1.5857864, 0}, 1}})));
  CHECK_FALSE(verdict(spectral({kSqrt2})));
  CHECK(verdict(spectral({kSqrt2, kMinusSqrt2})));
  CHECK_FALSE(verdict(spectral({{ip({-2, 0, 1}), {1.41421356, 0}, 2}, kMinusSqrt2})));
  CHECK(verdict(spectral({{ip({1, 1, 0, 1}), {0.3411639, 1.1615414}, 1}})));
  CHECK(verdict(spectral({{ip({3, -4, -1, 1}), {2.1986912, 0}, 1},
                          {ip({3, -4, -1, 1}), {-1.9122292, 0}, 1}})));
}

TEST_CASE("companion witness structure") {
  EigenData ed = eigen_data(spectral({{ip({3, -4, -1, 1}), {2.1986912, 0}, 1},
                                      {ip({3, -4, -1, 1}), {-1.9122292, 0}, 1}}));
  IntMat m = build_companion_witness(ed);
  REQUIRE(m.rows() == 3);
  CHECK(char_poly(m) == to_rat(ip({3, -4, -1, 1})));
  // det = +- product of constant terms of the blocks
  CHECK(det(m) == -3);

  // multiplicity 2 doubles the block
  EigenData g2 = eigen_data(spectral({{ip({-1, -1, 1}), {1.618, 0}, 2}}));
  IntMat m2 = build_companion_witness(g2);
  CHECK(m2.rows() == 4);
  CHECK(char_poly(m2) == to_rat(ip({-1, -1, 1})) * to_rat(ip({-1, -1, 1})));
}

TEST_CASE("growth comparisons are exact") {
  EigenData target = eigen_data(spectral({{ip({3, -4, -1, 1}), {2.1986912, 0}, 1},
                                          {ip({3, -4, -1, 1}), {-1.9122292, 0}, 1}}));
  WitnessReport w = check_growth_condition(build_companion_witness(target), target);
  CHECK(w.strict_max);
  CHECK(w.competitors.size() == 3);
  CHECK(std::abs(w.target_growth - 4.2044015) < 1e-6);
  int larger = 0, smaller = 0, ties = 0;
  for (const auto& c : w.competitors) {
    if (c.is_target) continue;
    (c.cmp_vs_target > 0 ? smaller : c.cmp_vs_target < 0 ? larger : ties)++;
  }
  CHECK(smaller == 2);
  CHECK(larger == 0);
  CHECK(ties == 0);

  // sqrt2 target ties with -sqrt2
  EigenData s = eigen_data(spectral({kSqrt2}));
  WitnessReport ws = check_growth_condition(build_companion_witness(s), s);
  CHECK_FALSE(ws.strict_max);
}

TEST_CASE("witness cross-validation on all six specs") {
  std::vector<ExpansionMap> specs = {
      spectral({{ip({7, -6, 1}), {4.4142135, 0}, 2}, {ip({7, -6, 1}), {1.5857864, 0}, 1}}),
      spectral({kSqrt2}),
      spectral({kSqrt2, kMinusSqrt2}),
      spectral({{ip({-2, 0, 1}), {1.41421356, 0}, 2}, kMinusSqrt2}),
      spectral({{ip({1, 1, 0, 1}), {0.3411639, 1.1615414}, 1}}),
      spectral({{ip({3, -4, -1, 1}), {2.1986912, 0}, 1}, {ip({3, -4, -1, 1}), {-1.9122292, 0}, 1}}),
  };
  for (const auto& phi : specs) {
    EigenData ed = eigen_data(phi);
    bool theorem = check_theorem_condition(ed).pass;
    bool witness = check_growth_condition(build_companion_witness(ed), ed).strict_max;
    CHECK(theorem == witness);
  }
}

TEST_CASE("verdict is invariant under conjugating the selection") {
  ExpansionMap up = spectral({{ip({1, 1, 0, 1}), {0.3411639, 1.1615414}, 1}});
  ExpansionMap down = spectral({{ip({1, 1, 0, 1}), {0.3411639, -1.1615414}, 1}});
  CHECK(check_theorem_condition(eigen_data(up)).pass ==
        check_theorem_condition(eigen_data(down)).pass);
}

TEST_CASE("lind and thurston criteria agree with the verdict") {
  // n = 1, real: pass iff Perron
  ExpansionMap perron = spectral({{ip({-1, 0, -1, 1}), {1.4655712, 0}, 1}});
  CHECK(check_theorem_condition(eigen_data(perron)).pass);
  CHECK(classify_perron(eigen_data(perron).values[0]) == PerronClass::Perron);
  ExpansionMap not_perron = spectral({kSqrt2});
  CHECK_FALSE(check_theorem_condition(eigen_data(not_perron)).pass);
  CHECK(classify_perron(eigen_data(not_perron).values[0]) != PerronClass::Perron);
  // n = 2, one complex pair: pass iff complex Perron
  ExpansionMap cperron = spectral({{ip({1, 1, 0, 1}), {0.3411639, 1.1615414}, 1}});
  CHECK(check_theorem_condition(eigen_data(cperron)).pass);
  Eigenvalue lam = eigen_data(cperron).values[0];
  CHECK(classify_perron(lam) == PerronClass::ComplexPerron);
}
