#pragma once

#include <utility>
#include <vector>

#include "affinetile/rational.hpp"

namespace tiling {

// Dense univariate polynomial, constant term first, no trailing zeros.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }

  // coefficient of x^i, zero beyond the degree
  T coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
    return c_[i];
  }
  const T& leading() const { return c_.back(); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<T> r = a.c_;
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> r = a.c_;
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = T(static_cast<long>(i)) * c_[i];
    return Poly(std::move(r));
  }

  // multiply by x^k
  Poly shifted(int k) const {
    if (is_zero()) return Poly();
    std::vector<T> r(c_.size() + k, T(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return Poly(std::move(r));
  }

  // p(-x)
  Poly reflected() const {
    std::vector<T> r = c_;
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return Poly(std::move(r));
  }

  // Horner evaluation in any ring X; conv lifts a coefficient into X.
  template <class X, class Conv>
  X eval(const X& pt, Conv conv) const {
    X acc = conv(T(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * pt + conv(*it);
    return acc;
  }
  T eval(const T& pt) const {
    return eval<T>(pt, [](const T& v) { return v; });
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

RatPoly to_rat(const IntPoly& p);
// primitive integer polynomial with positive leading coefficient, same roots
IntPoly clear_denominators(const RatPoly& p);

Int content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

bool is_monic(const IntPoly& p);
bool is_monic(const RatPoly& p);
RatPoly make_monic(const RatPoly& p);
// true iff all coefficients are integers
bool is_integral(const RatPoly& p);
IntPoly to_int_checked(const RatPoly& p);

// division with remainder over Q; divisor nonzero
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);
// exact division in Z[x]; throws math_error if not exact
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
bool divides(const RatPoly& b, const RatPoly& a);

// monic gcd over Q
RatPoly gcd(const RatPoly& a, const RatPoly& b);
// primitive gcd in Z[x] with positive leading coefficient
IntPoly gcd(const IntPoly& a, const IntPoly& b);

RatPoly squarefree_part(const RatPoly& p);
IntPoly squarefree_part(const IntPoly& p);
bool is_squarefree(const IntPoly& p);

// Yun's algorithm: returns (monic squarefree factor, multiplicity) pairs,
// multiplicities ascending, product of factor^mult = monic(p).
std::vector<std::pair<RatPoly, int>> yun_squarefree(const RatPoly& p);

// Polynomial whose roots are all pairwise products of roots of p and q,
// via Res_y(p(y), y^deg(q) q(x/y)).  Both inputs must be monic; result monic,
// degree deg(p)*deg(q).
IntPoly composed_product(const IntPoly& p, const IntPoly& q);

std::string to_string(const IntPoly& p);
std::string to_string(const RatPoly& p);

}  // namespace tiling
