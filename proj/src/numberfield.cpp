#include "affinetile/numberfield.hpp"

#include <algorithm>

#include "affinetile/factor.hpp"

namespace tiling {

NumberField::NumberField(const RatPoly& min_poly) : mp_(make_monic(min_poly)) {
  if (mp_.degree() < 1) throw input_error("number field needs a polynomial of degree >= 1");
  if (!is_irreducible(mp_)) throw input_error("number field polynomial must be irreducible");
  mpz_ = clear_denominators(mp_);
  roots_ = isolate_roots(mpz_, Rat(1, 1024));
}

FieldElem::FieldElem(const NumberField* f, std::vector<Rat> coeffs) : f_(f), c_(std::move(coeffs)) {
  if (!f_) throw input_error("FieldElem needs a field");
  if (static_cast<int>(c_.size()) > f_->degree()) throw input_error("coefficient vector too long");
  c_.resize(f_->degree(), Rat(0));
}

FieldElem FieldElem::theta(const NumberField* f) {
  if (f->degree() == 1) {
    // theta is the rational root itself
    return FieldElem(f, {-f->min_poly().coeff(0)});
  }
  std::vector<Rat> c(f->degree(), Rat(0));
  c[1] = Rat(1);
  return FieldElem(f, std::move(c));
}

FieldElem FieldElem::constant(const NumberField* f, const Rat& v) {
  std::vector<Rat> c(f->degree(), Rat(0));
  c[0] = v;
  return FieldElem(f, std::move(c));
}

bool FieldElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v == 0; });
}

bool FieldElem::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat FieldElem::rat_value() const {
  if (!is_rational()) throw math_error("field element is not rational");
  return c_.empty() ? Rat(0) : c_[0];
}

namespace {

const NumberField* common_field(const FieldElem& a, const FieldElem& b) {
  if (a.field() && b.field() && a.field() != b.field())
    throw math_error("field elements belong to different fields");
  return a.field() ? a.field() : b.field();
}

FieldElem lift(const FieldElem& a, const NumberField* f) {
  if (a.field() == f) return a;
  if (a.field()) throw math_error("field elements belong to different fields");
  if (!f) return a;
  return FieldElem::constant(f, a.rat_value());
}

// reduce a polynomial mod the field's monic minimal polynomial
std::vector<Rat> reduce_mod(RatPoly p, const NumberField* f) {
  const RatPoly& mp = f->min_poly();
  while (p.degree() >= mp.degree()) {
    Rat lead = p.leading();
    p = p - lead * mp.shifted(p.degree() - mp.degree());
  }
  std::vector<Rat> c = p.coeffs();
  c.resize(f->degree(), Rat(0));
  return c;
}

}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  const NumberField* f = common_field(a, b);
  if (!f) return FieldElem(a.rat_value() + b.rat_value());
  FieldElem x = lift(a, f), y = lift(b, f);
  std::vector<Rat> c(f->degree());
  for (size_t i = 0; i < c.size(); ++i) c[i] = x.coeff(i) + y.coeff(i);
  return FieldElem(f, std::move(c));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator-(const FieldElem& a) {
  if (!a.field()) return FieldElem(-a.rat_value());
  std::vector<Rat> c = a.coeffs();
  for (auto& v : c) v = -v;
  return FieldElem(a.field(), std::move(c));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  const NumberField* f = common_field(a, b);
  if (!f) return FieldElem(a.rat_value() * b.rat_value());
  FieldElem x = lift(a, f), y = lift(b, f);
  return FieldElem(f, reduce_mod(as_poly(x) * as_poly(y), f));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * inv(b); }

bool operator==(const FieldElem& a, const FieldElem& b) { return (a - b).is_zero(); }

FieldElem inv(const FieldElem& a) {
  if (a.is_zero()) throw math_error("division by zero field element");
  if (!a.field()) return FieldElem(Rat(1) / a.rat_value());
  const NumberField* f = a.field();
  // extended Euclid: u*a + v*mp = 1 in Q[x]
  RatPoly r0 = f->min_poly(), r1 = as_poly(a);
  RatPoly s0 = RatPoly(), s1 = RatPoly::constant(Rat(1));  // coeffs of a
  while (r1.degree() > 0) {
    auto [q, r] = divrem(r0, r1);
    RatPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) throw math_error("non-invertible field element");
  RatPoly u = (Rat(1) / r1.coeff(0)) * s1;
  return FieldElem(f, reduce_mod(u, f));
}

RatPoly as_poly(const FieldElem& a) { return RatPoly(a.coeffs()); }

RatMat mult_matrix(const FieldElem& a) {
  const NumberField* f = a.field();
  if (!f) {
    RatMat m(1, 1);
    m(0, 0) = a.rat_value();
    return m;
  }
  size_t d = f->degree();
  RatMat m(d, d);
  FieldElem cur = a;
  FieldElem th = FieldElem::theta(f);
  for (size_t j = 0; j < d; ++j) {
    for (size_t i = 0; i < d; ++i) m(i, j) = cur.coeff(i);
    if (j + 1 < d) cur = cur * th;
  }
  return m;
}

RatPoly minimal_poly(const FieldElem& a) {
  // char poly of the multiplication matrix is minpoly^(d/deg), so its radical
  // is exactly the minimal polynomial
  return radical(char_poly(mult_matrix(a)));
}

ComplexInterval embed(const FieldElem& a, size_t slot, long bits) {
  const NumberField* f = a.field();
  if (!f) return ComplexInterval(RatInterval(a.rat_value()), RatInterval(Rat(0)));
  long work = bits + 16;
  ComplexInterval root = f->root_enclosure(slot, work);
  RatPoly p = as_poly(a);
  ComplexInterval val = p.eval<ComplexInterval>(
      root, [](const Rat& v) { return ComplexInterval(RatInterval(v), RatInterval(Rat(0))); });
  // tighten until the requested resolution is met
  Rat target = pow2_inv(bits);
  while (val.width() > target) {
    work *= 2;
    if (work > (1L << 20)) throw math_error("embedding failed to reach requested precision");
    root = f->root_enclosure(slot, work);
    val = p.eval<ComplexInterval>(
        root, [](const Rat& v) { return ComplexInterval(RatInterval(v), RatInterval(Rat(0))); });
  }
  return val.coarsen(2 * work);
}

std::string to_string(const FieldElem& a) {
  if (!a.field() || a.is_rational()) return to_string(a.is_rational() ? a.rat_value() : Rat(0));
  std::string s;
  bool first = true;
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    const Rat& c = a.coeffs()[i];
    if (c == 0) continue;
    if (!first) s += " + ";
    first = false;
    if (i == 0) {
      s += to_string(c);
    } else {
      if (c != 1) s += to_string(c) + "*";
      s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  if (first) s = "0";
  return s;
}

}  // namespace tiling
