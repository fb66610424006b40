#pragma once

#include "affinetile/rational.hpp"

namespace tiling {

// Closed interval with exact rational endpoints.
struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat v) : lo(v), hi(std::move(v)) {}
  RatInterval(const Int& v) : lo(Rat(v)), hi(Rat(v)) {}
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw math_error("inverted interval");
  }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool is_point() const { return lo == hi; }
  // strictly inside the interior of other
  bool inside(const RatInterval& o) const { return o.lo < lo && hi < o.hi; }
  bool overlaps(const RatInterval& o) const { return !(hi < o.lo || o.hi < lo); }
  bool subset(const RatInterval& o) const { return o.lo <= lo && hi <= o.hi; }

  RatInterval abs() const;
  // outward dyadic rounding to 2^-bits resolution
  RatInterval coarsen(long bits) const { return {round_down(lo, bits), round_up(hi, bits)}; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
// throws math_error if b contains zero
RatInterval operator/(const RatInterval& a, const RatInterval& b);

RatInterval hull(const RatInterval& a, const RatInterval& b);
// intersection; throws math_error if disjoint
RatInterval intersect(const RatInterval& a, const RatInterval& b);

// Axis-aligned complex rectangle.
struct ComplexInterval {
  RatInterval re, im;

  ComplexInterval() = default;
  ComplexInterval(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
  ComplexInterval(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  ComplexInterval(const Int& v) : re(Rat(v)), im(Rat(0)) {}

  Rat width() const { return std::max(re.width(), im.width()); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool inside(const ComplexInterval& o) const { return re.inside(o.re) && im.inside(o.im); }
  bool overlaps(const ComplexInterval& o) const { return re.overlaps(o.re) && im.overlaps(o.im); }
  bool subset(const ComplexInterval& o) const { return re.subset(o.re) && im.subset(o.im); }
  bool is_real_line() const { return im.lo == 0 && im.hi == 0; }

  RatInterval mag_sq() const { return re * re + im * im; }
  ComplexInterval conj() const { return {re, -im}; }
  ComplexInterval coarsen(long bits) const { return {re.coarsen(bits), im.coarsen(bits)}; }
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
// throws math_error if b's rectangle contains zero
ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);

ComplexInterval hull(const ComplexInterval& a, const ComplexInterval& b);

}  // namespace tiling
