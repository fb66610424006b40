#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "affinetile/interval.hpp"
#include "affinetile/poly.hpp"

namespace tiling {

// An isolating rectangle for one simple root of a squarefree integer
// polynomial.  The rectangle is certified (Krawczyk test) to contain exactly
// one root; refining it never changes which root is selected.
class RootBox {
 public:
  RootBox(IntPoly poly, ComplexInterval box, bool real)
      : poly_(std::move(poly)), box_(std::move(box)), real_(real) {}

  const IntPoly& poly() const { return poly_; }
  const ComplexInterval& box() const { return box_; }
  bool is_real() const { return real_; }
  Rat radius() const;

  // shrink the rectangle until its half-width is <= target
  void refine_to(const Rat& target);
  ComplexInterval refined(long bits);

  std::pair<double, double> approx() const;
  RootBox conjugate() const;

 private:
  IntPoly poly_;
  ComplexInterval box_;
  bool real_;
};

// Isolate all roots of p.  p must be squarefree (precondition error
// otherwise); returns deg(p) pairwise disjoint certified boxes, each with
// half-width <= precision.  Non-real boxes come in conjugate pairs.
std::vector<RootBox> isolate_roots(const IntPoly& p, const Rat& precision);
std::vector<RootBox> isolate_roots(const RatPoly& p, const Rat& precision);

// Real roots only, ascending.
std::vector<RootBox> real_roots(const IntPoly& p, const Rat& precision);

// Exact equality of two certified boxes over the same squarefree polynomial.
bool same_root(RootBox a, RootBox b);

// A real algebraic number: a squarefree integer polynomial it is a root of,
// plus a certified enclosure at any requested precision.
struct RealAlg {
  IntPoly poly;
  std::function<RatInterval(long bits)> approx;

  static RealAlg from_rational(const Rat& q);
  static RealAlg from_root(const RootBox& real_box);
};

// Exact three-way comparison (-1, 0, 1); ties certified algebraically.
int compare_exact(const RealAlg& a, const RealAlg& b);
// true iff the value of a is a root of g
bool is_root_of(const RealAlg& a, const IntPoly& g);

// |root|^2 as a real algebraic number (root of the squarefree part of the
// composed product of the owning polynomial with itself).
RealAlg modulus_squared(const RootBox& root);

// product of real algebraic numbers, as a real algebraic number
RealAlg product(const std::vector<RealAlg>& factors);
// |a| of a real algebraic number; sign of a must be decidable (a != 0)
RealAlg abs_value(const RealAlg& a);

// Index of the unique box whose value equals the approximated one; the value
// must be a root of the boxes' polynomial.
size_t identify_root(std::vector<RootBox>& boxes,
                     const std::function<ComplexInterval(long bits)>& approx);

}  // namespace tiling
