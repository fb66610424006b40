#include "affinetile/roots.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <optional>

namespace tiling {

namespace {

constexpr long kBitsCap = 1 << 14;

// exact complex rational point
struct CRat {
  Rat re, im;
};

CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
CRat operator*(const CRat& a, const CRat& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
bool is_zero(const CRat& a) { return a.re == 0 && a.im == 0; }
CRat inv(const CRat& a) {
  Rat n = a.re * a.re + a.im * a.im;
  return {a.re / n, -a.im / n};
}
CRat round_crat(const CRat& a, long bits) { return {round_near(a.re, bits), round_near(a.im, bits)}; }
Rat mag_upper(const CRat& a) { return rat_abs(a.re) + rat_abs(a.im); }

ComplexInterval to_ci(const CRat& z) { return {RatInterval(z.re), RatInterval(z.im)}; }

CRat eval_crat(const IntPoly& p, const CRat& z) {
  CRat acc{Rat(0), Rat(0)};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * z + CRat{Rat(*it), Rat(0)};
  return acc;
}

ComplexInterval eval_ci(const IntPoly& p, const ComplexInterval& x) {
  return p.eval<ComplexInterval>(x, [](const Int& v) { return ComplexInterval(v); });
}

RatInterval eval_ri(const IntPoly& p, const RatInterval& x) {
  return p.eval<RatInterval>(x, [](const Int& v) { return RatInterval(v); });
}

std::optional<ComplexInterval> krawczyk_op(const IntPoly& p, const IntPoly& dp,
                                           const ComplexInterval& x, const CRat& z) {
  CRat dz = eval_crat(dp, z);
  if (is_zero(dz)) return std::nullopt;
  CRat y = inv(dz);
  CRat pz = eval_crat(p, z);
  ComplexInterval one(Rat(1), Rat(0));
  ComplexInterval dx = eval_ci(dp, x);
  ComplexInterval ciy = to_ci(y), ciz = to_ci(z);
  return ciz - ciy * to_ci(pz) + (one - ciy * dx) * (x - ciz);
}

std::optional<RatInterval> krawczyk_op_real(const IntPoly& p, const IntPoly& dp,
                                            const RatInterval& x, const Rat& z) {
  auto rat_eval = [](const IntPoly& f, const Rat& pt) {
    return f.eval<Rat>(pt, [](const Int& v) { return Rat(v); });
  };
  Rat d = rat_eval(dp, z);
  if (d == 0) return std::nullopt;
  Rat y = 1 / d;
  Rat pz = rat_eval(p, z);
  RatInterval one{Rat(1)};
  RatInterval dx = eval_ri(dp, x);
  RatInterval riy{y}, riz{z};
  return riz - riy * RatInterval(pz) + (one - riy * dx) * (x - riz);
}

bool certify_complex(const IntPoly& p, const IntPoly& dp, const ComplexInterval& x, const CRat& z) {
  auto k = krawczyk_op(p, dp, x, z);
  return k && k->inside(x);
}

bool certify_real(const IntPoly& p, const IntPoly& dp, const RatInterval& x, const Rat& z) {
  auto k = krawczyk_op_real(p, dp, x, z);
  return k && k->inside(x);
}

long bits_for(const Rat& target) {
  long b = 0;
  Rat t = target;
  while (t < 1 && b < kBitsCap) {
    t *= 2;
    ++b;
  }
  return b;
}

Rat rat_from_double(double v) {
  if (!std::isfinite(v)) throw math_error("non-finite floating value");
  return Rat(v);
}

// monic_coeffs holds the d low-order coefficients of a monic degree-d polynomial
std::vector<std::complex<double>> durand_kerner(const std::vector<double>& monic_coeffs) {
  int d = static_cast<int>(monic_coeffs.size());
  std::vector<std::complex<double>> z(d);
  double radius = 1.0;
  for (int i = 0; i < d; ++i) radius = std::max(radius, std::abs(monic_coeffs[i]));
  radius = 1.0 + radius;
  for (int i = 0; i < d; ++i) {
    double angle = 2.0 * M_PI * i / d + 0.4;
    z[i] = std::polar(radius, angle);
  }
  auto eval = [&](std::complex<double> w) {
    std::complex<double> acc = 1.0;
    for (int i = d - 1; i >= 0; --i) acc = acc * w + monic_coeffs[i];
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    double max_step = 0.0, max_mag = 1.0;
    for (int i = 0; i < d; ++i) {
      std::complex<double> denom = 1.0;
      for (int j = 0; j < d; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      if (denom == std::complex<double>(0.0)) {
        z[i] += std::complex<double>(1e-6, 1e-6);
        continue;
      }
      std::complex<double> step = eval(z[i]) / denom;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step));
      max_mag = std::max(max_mag, std::abs(z[i]));
    }
    if (max_step < 1e-14 * max_mag) break;
  }
  return z;
}

// Newton polish in exact rational arithmetic, rounded to work precision.
CRat polish(const IntPoly& p, const IntPoly& dp, CRat z, long bits, const Rat& tol) {
  for (int i = 0; i < 200; ++i) {
    CRat d = eval_crat(dp, z);
    if (is_zero(d)) break;
    CRat step = eval_crat(p, z) * inv(d);
    z = round_crat(z - step, 2 * bits + 32);
    if (mag_upper(step) < tol) break;
  }
  return z;
}

}  // namespace

Rat RootBox::radius() const {
  return std::max(box_.re.width(), box_.im.width()) / 2;
}

std::pair<double, double> RootBox::approx() const {
  return {to_double(box_.re.mid()), to_double(box_.im.mid())};
}

RootBox RootBox::conjugate() const {
  if (real_) return *this;
  return RootBox(poly_, box_.conj(), false);
}

void RootBox::refine_to(const Rat& target) {
  if (radius() <= target) return;
  if (target <= 0) throw math_error("refine_to requires positive target");
  IntPoly dp = poly_.derivative();
  long work = std::max<long>(64, bits_for(target) + 32);
  long cap = std::max<long>(4096, 8 * bits_for(target) + 256);
  while (radius() > target) {
    // polish the center, then certify a small sub-box around it
    CRat z{box_.re.mid(), real_ ? Rat(0) : box_.im.mid()};
    z = polish(poly_, dp, round_crat(z, work), work, target / 16);
    if (real_) z.im = 0;
    bool improved = false;
    for (Rat h = target / 2; !improved && h <= radius() / 2; h *= 4) {
      if (real_) {
        RatInterval cand{z.re - h, z.re + h};
        if (cand.subset(box_.re) && certify_real(poly_, dp, cand, z.re)) {
          box_.re = cand;
          improved = true;
        }
      } else {
        ComplexInterval cand{{z.re - h, z.re + h}, {z.im - h, z.im + h}};
        if (cand.subset(box_) && certify_complex(poly_, dp, cand, z)) {
          box_ = cand;
          improved = true;
        }
      }
    }
    if (!improved) {
      work *= 2;
      if (work > cap) throw math_error("root refinement failed to converge");
    }
  }
}

ComplexInterval RootBox::refined(long bits) {
  refine_to(pow2_inv(bits));
  return box_;
}

std::vector<RootBox> isolate_roots(const RatPoly& p, const Rat& precision) {
  return isolate_roots(clear_denominators(p), precision);
}

std::vector<RootBox> isolate_roots(const IntPoly& p_in, const Rat& precision) {
  if (p_in.is_zero()) throw math_error("isolate_roots: zero polynomial");
  if (!is_squarefree(p_in)) throw math_error("isolate_roots requires a squarefree polynomial");
  if (precision <= 0) throw math_error("isolate_roots: precision must be positive");
  IntPoly p = primitive_part(p_in);
  int d = p.degree();
  std::vector<RootBox> out;
  if (d <= 0) return out;

  IntPoly work = p;
  if (work.coeff(0) == 0) {
    // squarefree, so exactly one root at the origin
    out.emplace_back(p, ComplexInterval(Rat(0), Rat(0)), true);
    work = exact_div(work, IntPoly::x());
  }
  if (work.degree() == 1) {
    Rat r = Rat(-work.coeff(0)) / Rat(work.coeff(1));
    out.emplace_back(p, ComplexInterval(r, Rat(0)), true);
  } else if (work.degree() >= 2) {
    std::vector<double> mc(work.degree());
    for (int i = 0; i < work.degree(); ++i)
      mc[i] = to_double(Rat(work.coeff(i)) / Rat(work.leading()));
    auto approx = durand_kerner(mc);

    double sep = 1e300;
    for (size_t i = 0; i < approx.size(); ++i)
      for (size_t j = i + 1; j < approx.size(); ++j)
        sep = std::min(sep, std::abs(approx[i] - approx[j]));
    if (!out.empty())
      for (const auto& z : approx) sep = std::min(sep, std::abs(z));
    double h0 = std::min(sep / 4.0, 0.125);

    IntPoly dp = p.derivative();
    std::vector<bool> consumed(approx.size(), false);
    for (size_t i = 0; i < approx.size(); ++i) {
      if (consumed[i]) continue;
      std::complex<double> z = approx[i];
      bool done = false;
      long bits = 64;
      Rat h = rat_from_double(std::max(h0, 1e-14));
      CRat zr{rat_from_double(z.real()), rat_from_double(z.imag())};
      for (int attempt = 0; attempt < 8 && !done; ++attempt) {
        zr = polish(p, dp, zr, bits, h / 64);
        // real candidate first
        if (rat_abs(zr.im) < h / 2) {
          RatInterval x{zr.re - h, zr.re + h};
          if (certify_real(p, dp, x, zr.re)) {
            out.emplace_back(p, ComplexInterval(x, RatInterval(Rat(0))), true);
            done = true;
            break;
          }
        }
        if (zr.im != 0) {
          CRat zc = zr.im > 0 ? zr : CRat{zr.re, -zr.im};
          Rat hc = std::min(h, Rat(zc.im / 2));
          if (hc > 0) {
            ComplexInterval x{{zc.re - hc, zc.re + hc}, {zc.im - hc, zc.im + hc}};
            if (certify_complex(p, dp, x, zc)) {
              out.emplace_back(p, x, false);
              out.emplace_back(p, x.conj(), false);
              // mark the conjugate approximation as consumed
              size_t best = i;
              double best_d = 1e300;
              for (size_t j = 0; j < approx.size(); ++j) {
                if (j == i || consumed[j]) continue;
                double dist = std::abs(approx[j] - std::conj(z));
                if (dist < best_d) {
                  best_d = dist;
                  best = j;
                }
              }
              if (best != i) consumed[best] = true;
              done = true;
              break;
            }
          }
        }
        bits *= 2;
        h = h / 16;
        if (bits > 1024) break;
      }
      if (!done) throw math_error("root certification failed for " + to_string(p));
    }
  }

  if (static_cast<int>(out.size()) != d) throw math_error("root count mismatch for " + to_string(p));

  // enforce pairwise disjoint boxes
  for (int round = 0; round < 64; ++round) {
    bool overlap = false;
    for (size_t i = 0; i < out.size() && !overlap; ++i)
      for (size_t j = i + 1; j < out.size() && !overlap; ++j)
        if (out[i].box().overlaps(out[j].box())) overlap = true;
    if (!overlap) break;
    for (auto& b : out) {
      Rat r = b.radius();
      if (r > 0) b.refine_to(r / 4);
    }
    if (round == 63) throw math_error("failed to separate root boxes for " + to_string(p));
  }

  for (auto& b : out) b.refine_to(precision);
  std::sort(out.begin(), out.end(), [](const RootBox& a, const RootBox& b) {
    Rat ra = a.box().re.mid(), rb = b.box().re.mid();
    if (ra != rb) return ra < rb;
    return a.box().im.mid() < b.box().im.mid();
  });
  return out;
}

std::vector<RootBox> real_roots(const IntPoly& p, const Rat& precision) {
  auto all = isolate_roots(p, precision);
  std::vector<RootBox> out;
  for (auto& b : all)
    if (b.is_real()) out.push_back(std::move(b));
  return out;
}

bool same_root(RootBox a, RootBox b) {
  if (a.poly() != b.poly()) throw math_error("same_root requires a common polynomial");
  // a point box is an exact root; the other box holds exactly one root, so
  // membership decides
  if (a.radius() == 0)
    return b.box().re.contains(a.box().re.lo) && b.box().im.contains(a.box().im.lo);
  if (b.radius() == 0)
    return a.box().re.contains(b.box().re.lo) && a.box().im.contains(b.box().im.lo);
  if (a.is_real() != b.is_real()) {
    // a real segment and a certified off-axis rectangle can only coincide if
    // the rectangle touches the axis; disjointness decides
  }
  IntPoly dp = a.poly().derivative();
  long bits = 64;
  while (bits <= kBitsCap) {
    if (!a.box().overlaps(b.box())) return false;
    ComplexInterval h = hull(a.box(), b.box());
    if (a.is_real() && b.is_real()) {
      Rat z = round_near(h.re.mid(), bits);
      if (certify_real(a.poly(), dp, h.re, z)) return true;
    } else {
      CRat z = round_crat({h.re.mid(), h.im.mid()}, bits);
      if (certify_complex(a.poly(), dp, h, z)) return true;
    }
    a.refine_to(a.radius() / 8);
    b.refine_to(b.radius() / 8);
    bits *= 2;
  }
  throw math_error("same_root failed to decide");
}

RealAlg RealAlg::from_rational(const Rat& q) {
  IntPoly poly = clear_denominators(RatPoly{Rat(-q), Rat(1)});
  return {poly, [q](long) { return RatInterval(q); }};
}

RealAlg RealAlg::from_root(const RootBox& real_box) {
  if (!real_box.is_real()) throw math_error("RealAlg::from_root requires a real root");
  auto shared = std::make_shared<RootBox>(real_box);
  return {real_box.poly(), [shared](long bits) { return shared->refined(bits).re; }};
}

bool is_root_of(const RealAlg& a, const IntPoly& g) {
  IntPoly h = gcd(a.poly, g);
  if (h.degree() <= 0) return false;
  IntPoly q = clear_denominators(divrem(to_rat(a.poly), to_rat(h)).first);
  for (long bits = 64; bits <= kBitsCap; bits *= 2) {
    RatInterval x = a.approx(bits);
    if (!eval_ri(q, x).contains_zero()) return true;
    if (!eval_ri(h, x).contains_zero()) return false;
  }
  throw math_error("is_root_of failed to decide");
}

size_t identify_root(std::vector<RootBox>& boxes,
                     const std::function<ComplexInterval(long bits)>& approx) {
  for (long bits = 16; bits <= kBitsCap; bits *= 2) {
    ComplexInterval x = approx(bits);
    size_t count = 0, idx = 0;
    for (size_t i = 0; i < boxes.size(); ++i)
      if (boxes[i].box().overlaps(x)) {
        ++count;
        idx = i;
      }
    if (count == 1) return idx;
    if (count == 0) throw math_error("identify_root: value matches no root box");
  }
  throw math_error("identify_root failed to converge");
}

int compare_exact(const RealAlg& a, const RealAlg& b) {
  IntPoly g = gcd(a.poly, b.poly);
  if (g.degree() >= 1 && is_root_of(a, g) && is_root_of(b, g)) {
    auto boxes = real_roots(g, Rat(1, 1024));
    auto wrap = [](const RealAlg& v) {
      return [&v](long bits) {
        return ComplexInterval(v.approx(bits), RatInterval(Rat(0)));
      };
    };
    size_t ia = identify_root(boxes, wrap(a));
    size_t ib = identify_root(boxes, wrap(b));
    if (ia == ib) return 0;
  }
  for (long bits = 64; bits <= kBitsCap; bits *= 2) {
    RatInterval xa = a.approx(bits), xb = b.approx(bits);
    if (!xa.overlaps(xb)) return xa.hi < xb.lo ? -1 : 1;
  }
  throw math_error("compare_exact failed to separate distinct values");
}

RealAlg modulus_squared(const RootBox& root) {
  if (!is_monic(root.poly())) throw math_error("modulus_squared requires a monic polynomial");
  IntPoly s = squarefree_part(composed_product(root.poly(), root.poly()));
  auto shared = std::make_shared<RootBox>(root);
  return {s, [shared](long bits) { return shared->refined(bits).mag_sq().coarsen(bits); }};
}

RealAlg product(const std::vector<RealAlg>& factors) {
  if (factors.empty()) return RealAlg::from_rational(Rat(1));
  IntPoly poly = factors[0].poly;
  if (!is_monic(poly)) throw math_error("product requires monic factor polynomials");
  for (size_t i = 1; i < factors.size(); ++i) {
    if (!is_monic(factors[i].poly)) throw math_error("product requires monic factor polynomials");
    poly = squarefree_part(composed_product(poly, factors[i].poly));
  }
  auto fs = factors;
  return {poly, [fs](long bits) {
            RatInterval acc(Rat(1));
            for (const auto& f : fs) acc = acc * f.approx(bits);
            return acc.coarsen(bits);
          }};
}

RealAlg abs_value(const RealAlg& a) {
  int sign = 0;
  for (long bits = 64; bits <= kBitsCap && sign == 0; bits *= 2) {
    RatInterval x = a.approx(bits);
    if (x.lo > 0) sign = 1;
    else if (x.hi < 0) sign = -1;
  }
  if (sign == 0) throw math_error("abs_value: could not separate value from zero");
  if (sign > 0) return a;
  IntPoly refl = a.poly.reflected();
  if (refl.leading() < 0) refl = -refl;
  auto inner = a.approx;
  return {refl, [inner](long bits) { return -inner(bits); }};
}

}  // namespace tiling
