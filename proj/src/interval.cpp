#include "affinetile/interval.hpp"

#include <algorithm>

namespace tiling {

RatInterval RatInterval::abs() const {
  if (lo >= 0) return *this;
  if (hi <= 0) return {-hi, -lo};
  return {Rat(0), std::max(Rat(-lo), hi)};
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
RatInterval operator-(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)), std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
  if (b.contains_zero()) throw math_error("interval division by interval containing zero");
  return a * RatInterval(1 / b.hi, 1 / b.lo);
}

RatInterval hull(const RatInterval& a, const RatInterval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

RatInterval intersect(const RatInterval& a, const RatInterval& b) {
  if (!a.overlaps(b)) throw math_error("empty interval intersection");
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}
ComplexInterval operator-(const ComplexInterval& a) { return {-a.re, -a.im}; }

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  RatInterval den = b.mag_sq();
  if (den.contains_zero()) throw math_error("complex interval division by rectangle containing zero");
  ComplexInterval num = a * b.conj();
  return {num.re / den, num.im / den};
}

ComplexInterval hull(const ComplexInterval& a, const ComplexInterval& b) {
  return {hull(a.re, b.re), hull(a.im, b.im)};
}

}  // namespace tiling
