#pragma once

#include <string>
#include <vector>

#include "affinetile/matrix.hpp"
#include "affinetile/roots.hpp"

namespace tiling {

// Q(theta) for theta a root of a monic irreducible polynomial.  Roots are
// isolated once and cached; their order (ascending by real part, then
// imaginary part) is the slot order used for embeddings.
class NumberField {
 public:
  explicit NumberField(const RatPoly& min_poly);

  int degree() const { return mp_.degree(); }
  const RatPoly& min_poly() const { return mp_; }
  const IntPoly& min_poly_int() const { return mpz_; }

  size_t num_roots() const { return roots_.size(); }
  const RootBox& root(size_t i) const { return roots_.at(i); }
  ComplexInterval root_enclosure(size_t i, long bits) const { return roots_.at(i).refined(bits); }

 private:
  RatPoly mp_;
  IntPoly mpz_;
  mutable std::vector<RootBox> roots_;
};

// Element of a number field, as a rational coefficient vector in the power
// basis.  A null field means a plain rational constant, so FieldElem models
// an exact field type usable with the generic matrix routines.
class FieldElem {
 public:
  FieldElem() : c_{Rat(0)} {}
  FieldElem(int v) : c_{Rat(v)} {}
  FieldElem(long v) : c_{Rat(v)} {}
  explicit FieldElem(Rat v) : c_{std::move(v)} {}
  FieldElem(const NumberField* f, std::vector<Rat> coeffs);

  static FieldElem theta(const NumberField* f);
  static FieldElem constant(const NumberField* f, const Rat& v);

  const NumberField* field() const { return f_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  bool is_zero() const;
  bool is_rational() const;
  Rat rat_value() const;  // throws unless is_rational()

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

 private:
  const NumberField* f_ = nullptr;
  std::vector<Rat> c_;
};

FieldElem inv(const FieldElem& a);

RatPoly as_poly(const FieldElem& a);

// matrix of multiplication by a in the power basis
RatMat mult_matrix(const FieldElem& a);

// monic minimal polynomial of a over Q
RatPoly minimal_poly(const FieldElem& a);

// certified enclosure of the image of a under the embedding sending theta to
// root slot `slot`, at roughly 2^-bits resolution
ComplexInterval embed(const FieldElem& a, size_t slot, long bits);

std::string to_string(const FieldElem& a);

}  // namespace tiling
