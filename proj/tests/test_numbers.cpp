#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "affinetile/factor.hpp"
#include "affinetile/numberfield.hpp"
#include "doctest.h"

using namespace tiling;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

RatPoly rp(std::initializer_list<long> c) { return to_rat(ip(c)); }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat("-3/4") == Rat(-3, 4));
  CHECK(parse_rat("1.25") == Rat(5, 4));
  CHECK_THROWS_AS(parse_rat("x"), input_error);
  CHECK(to_string(Rat(-3, 4)) == "-3/4");
  CHECK(to_string(Rat(5)) == "5");
}

TEST_CASE("polynomial arithmetic basics") {
  RatPoly p = rp({1, 1, 0, 1});  // x^3 + x + 1
  RatPoly q = rp({-1, 1});
  CHECK((p * q).degree() == 4);
  CHECK(p.coeff(3) == 1);
  CHECK(p.derivative() == rp({1, 0, 3}));
  CHECK(to_string(p) == "x^3 + x + 1");
}

TEST_CASE("squarefree decomposition") {
  RatPoly p = rp({-1, 1}) * rp({-1, 1}) * rp({-2, 1});  // (x-1)^2 (x-2)
  CHECK(radical(p) == rp({-1, 1}) * rp({-2, 1}));
}

TEST_CASE("factor_rational reproduces the input") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int deg = 1 + static_cast<int>(rng() % 6);
    std::vector<Rat> c(deg + 1);
    for (auto& v : c) v = Rat(static_cast<long>(rng() % 11) - 5);
    c[deg] = Rat(1 + static_cast<long>(rng() % 4));
    RatPoly p{std::vector<Rat>(c)};
    if (p.degree() < 1) continue;
    auto factors = factor_rational(p);
    RatPoly prod = RatPoly::constant(p.leading());
    for (const auto& [f, m] : factors)
      for (int i = 0; i < m; ++i) prod = prod * f;
    CHECK(prod == p);
    for (const auto& [f, m] : factors) CHECK(is_irreducible(f));
  }
}

TEST_CASE("known factorizations") {
  // x^4 - 4 = (x^2-2)(x^2+2)
  auto f = factor_rational(ip({-4, 0, 0, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == rp({-2, 0, 1}));
  CHECK(f[1].first == rp({2, 0, 1}));
  CHECK(is_irreducible(rp({1, 1, 0, 1})));
  CHECK(is_irreducible(rp({3, -4, -1, 1})));
  CHECK_FALSE(is_irreducible(rp({-4, 0, 0, 0, 1})));
  // degree-8 cyclotomic-style input
  CHECK(is_irreducible(rp({1, 0, 0, 0, 0, 0, 0, 0, 1})));  // x^8 + 1
}

TEST_CASE("root isolation matches published decimals") {
  auto roots = real_roots(ip({3, -4, -1, 1}), Rat(1, 1 << 20));
  REQUIRE(roots.size() == 3);
  auto near = [](RootBox& b, double v) {
    auto [re, im] = b.approx();
    CHECK(im == 0);
    CHECK(std::abs(re - v) < 1e-5);
  };
  near(roots[0], -1.91223);
  near(roots[1], 0.71354);
  near(roots[2], 2.19869);
}

TEST_CASE("isolated boxes are disjoint and conjugate-paired") {
  IntPoly p = ip({1, 1, 0, 1});
  auto roots = isolate_roots(p, Rat(1, 1024));
  REQUIRE(roots.size() == 3);
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      CHECK_FALSE(roots[i].box().overlaps(roots[j].box()));
  int real = 0, complex = 0;
  for (const auto& r : roots) (r.is_real() ? real : complex)++;
  CHECK(real == 1);
  CHECK(complex == 2);
  // conjugate pair mirrors
  std::vector<const RootBox*> nonreal;
  for (const auto& r : roots)
    if (!r.is_real()) nonreal.push_back(&r);
  CHECK(nonreal[0]->box().re.lo == nonreal[1]->box().re.lo);
  CHECK(nonreal[0]->box().im.lo == -nonreal[1]->box().im.hi);
}

TEST_CASE("isolation rejects non-squarefree input") {
  CHECK_THROWS_AS(isolate_roots(ip({1, 2, 1}), Rat(1, 1024)), math_error);
}

TEST_CASE("composed product with x-1 preserves roots") {
  IntPoly p = ip({3, -4, -1, 1});
  IntPoly q = composed_product(p, ip({-1, 1}));
  // roots of q = roots of p times 1
  auto a = real_roots(p, Rat(1, 1 << 16));
  for (auto& r : a) CHECK(is_root_of(RealAlg::from_root(r), q));
}

TEST_CASE("exact comparison and squared moduli") {
  IntPoly p2 = ip({-2, 0, 1});
  auto r = real_roots(p2, Rat(1, 1024));
  RealAlg s2 = RealAlg::from_root(r[1]);   // sqrt 2
  RealAlg ms2 = RealAlg::from_root(r[0]);  // -sqrt 2
  CHECK(compare_exact(s2, ms2) == 1);
  CHECK(compare_exact(modulus_squared(r[0]), modulus_squared(r[1])) == 0);
  CHECK(compare_exact(modulus_squared(r[1]), RealAlg::from_rational(Rat(2))) == 0);
  // |lambda|^2 for the complex root of x^3+x+1 equals 1/|real root|
  auto roots = isolate_roots(ip({1, 1, 0, 1}), Rat(1, 1024));
  for (auto& b : roots) {
    if (b.is_real()) continue;
    RealAlg m = modulus_squared(b);
    RatInterval enc = m.approx(40);
    CHECK(std::abs(to_double(enc.mid()) - 1.4655712318) < 1e-9);
  }
}

TEST_CASE("hermite normal form is canonical") {
  IntMat g(2, 3);
  g(0, 0) = 2; g(0, 1) = 4; g(0, 2) = 4;
  g(1, 0) = -1; g(1, 1) = 0; g(1, 2) = 2;
  IntMat h = hnf_columns(g);
  // same column span given in a different order/signs
  IntMat g2(2, 3);
  g2(0, 0) = -4; g2(0, 1) = 2; g2(0, 2) = 8;
  g2(1, 0) = -2; g2(1, 1) = -1; g2(1, 2) = 2;
  CHECK(h == hnf_columns(g2));
  for (size_t j = 0; j < h.cols(); ++j) {
    size_t i = 0;
    while (i < h.rows() && h(i, j) == 0) ++i;
    REQUIRE(i < h.rows());
    CHECK(h(i, j) > 0);
  }
}

TEST_CASE("char poly, determinant and diagonalizability") {
  RatMat fib(2, 2);
  fib(0, 1) = 1; fib(1, 0) = 1; fib(1, 1) = 1;
  CHECK(char_poly(fib) == rp({-1, -1, 1}));
  CHECK(det(fib) == -1);
  CHECK(is_diagonalizable(fib));
  RatMat jordan(2, 2);
  jordan(0, 0) = 3; jordan(0, 1) = 1; jordan(1, 1) = 3;
  CHECK_FALSE(is_diagonalizable(jordan));
  CHECK(is_diagonalizable(RatMat::identity(3)));
}

TEST_CASE("number field arithmetic") {
  NumberField f(rp({1, 1, 0, 1}));  // x^3 + x + 1
  FieldElem t = FieldElem::theta(&f);
  CHECK(t * t * t == -t - FieldElem(1));  // defining relation
  FieldElem a = t * t - FieldElem(3);
  CHECK(a * inv(a) == FieldElem(1));
  CHECK(minimal_poly(t) == rp({1, 1, 0, 1}));
  CHECK(minimal_poly(FieldElem::constant(&f, Rat(7))) == rp({-7, 1}));
  CHECK_THROWS_AS(inv(FieldElem(0)), math_error);
}

TEST_CASE("field ring axioms on random triples") {
  NumberField f(rp({3, -4, -1, 1}));
  std::mt19937 rng(11);
  auto rand_elem = [&] {
    std::vector<Rat> c(3);
    for (auto& v : c) {
      v = Rat(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4));
      v.canonicalize();
    }
    return FieldElem(&f, std::move(c));
  };
  for (int i = 0; i < 200; ++i) {
    FieldElem a = rand_elem(), b = rand_elem(), c = rand_elem();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("embed is a certified homomorphism") {
  NumberField f(rp({1, 1, 0, 1}));
  FieldElem t = FieldElem::theta(&f);
  FieldElem a = t * t + FieldElem(1), b = t - FieldElem(2);
  for (size_t slot = 0; slot < 3; ++slot) {
    ComplexInterval prod = embed(a * b, slot, 80);
    ComplexInterval sep = embed(a, slot, 80) * embed(b, slot, 80);
    CHECK(prod.overlaps(sep));
  }
  // theta^2 - theta under the x2 embedding of x^3-x^2-4x+3
  NumberField g(rp({3, -4, -1, 1}));
  FieldElem u = FieldElem::theta(&g);
  ComplexInterval v = embed(u * u - u, 0, 64);  // slot 0 = most negative root x2
  CHECK(std::abs(to_double(v.re.mid()) - 5.5688496) < 1e-6);
}

TEST_CASE("constants embed exactly") {
  NumberField f(rp({-1, -1, 1}));
  ComplexInterval v = embed(FieldElem::constant(&f, Rat(7)), 0, 64);
  CHECK(v.re.lo == 7);
  CHECK(v.re.hi == 7);
  CHECK(v.im.lo == 0);
}
