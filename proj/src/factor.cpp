#include "affinetile/factor.hpp"

#include <algorithm>
#include <random>

namespace tiling {

namespace {

// --- arithmetic in F_P[x], dense, constant term first ---

using ZPoly = std::vector<Int>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Int mod_p(const Int& v, const Int& P) {
  Int r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), P.get_mpz_t());
  return r;
}

Int inv_mod(const Int& v, const Int& P) {
  Int r;
  if (!mpz_invert(r.get_mpz_t(), v.get_mpz_t(), P.get_mpz_t()))
    throw math_error("non-invertible element mod p");
  return r;
}

ZPoly zreduce(const IntPoly& p, const Int& P) {
  ZPoly r(p.coeffs().size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = mod_p(p.coeffs()[i], P);
  ztrim(r);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Int& P) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& v : r) v = mod_p(v, P);
  ztrim(r);
  return r;
}

ZPoly zsub(ZPoly a, const ZPoly& b, const Int& P) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] = mod_p(a[i] - b[i], P);
  ztrim(a);
  return a;
}

// remainder of a by b (b nonzero)
ZPoly zrem(ZPoly a, const ZPoly& b, const Int& P) {
  Int linv = inv_mod(b.back(), P);
  while (a.size() >= b.size()) {
    Int q = mod_p(a.back() * linv, P);
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] = mod_p(a[off + i] - q * b[i], P);
    ztrim(a);
  }
  return a;
}

ZPoly zmonic(ZPoly a, const Int& P) {
  if (a.empty()) return a;
  Int linv = inv_mod(a.back(), P);
  for (auto& v : a) v = mod_p(v * linv, P);
  return a;
}

ZPoly zgcd(ZPoly a, ZPoly b, const Int& P) {
  while (!b.empty()) {
    ZPoly r = zrem(a, b, P);
    a = std::move(b);
    b = std::move(r);
  }
  return zmonic(a, P);
}

// a^e mod m in F_P[x]
ZPoly zpowmod(ZPoly a, Int e, const ZPoly& m, const Int& P) {
  ZPoly r{Int(1)};
  a = zrem(std::move(a), m, P);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = zrem(zmul(r, a, P), m, P);
    e >>= 1;
    if (e > 0) a = zrem(zmul(a, a, P), m, P);
  }
  return r;
}

ZPoly zderiv(const ZPoly& a, const Int& P) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mod_p(Int(static_cast<long>(i)) * a[i], P);
  ztrim(r);
  return r;
}

Int zrand_coeff(std::mt19937_64& rng, const Int& P) {
  Int v = Int(rng()) << 64;
  v += Int(rng());
  return mod_p(v, P);
}

// equal-degree splitting (Cantor-Zassenhaus); f monic squarefree, all
// irreducible factors of degree d
void edf(const ZPoly& f, int d, const Int& P, std::mt19937_64& rng, std::vector<ZPoly>& out) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Int q;
  mpz_pow_ui(q.get_mpz_t(), P.get_mpz_t(), d);
  Int e = (q - 1) / 2;
  for (int tries = 0; tries < 200; ++tries) {
    ZPoly a(n);
    for (auto& v : a) v = zrand_coeff(rng, P);
    ztrim(a);
    if (a.empty()) continue;
    ZPoly b = zpowmod(a, e, f, P);
    if (b.empty()) continue;
    b[0] = mod_p(b[0] - 1, P);
    ztrim(b);
    ZPoly g = zgcd(f, b, P);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0 && dg < n) {
      edf(g, d, P, rng, out);
      ZPoly rest = f;
      // divide f by g exactly (both monic): rest = f / g via synthetic division
      {
        ZPoly quo(f.size() - g.size() + 1, Int(0));
        ZPoly rem = f;
        while (rem.size() >= g.size()) {
          Int c = rem.back();
          size_t off = rem.size() - g.size();
          quo[off] = c;
          for (size_t i = 0; i < g.size(); ++i) rem[off + i] = mod_p(rem[off + i] - c * g[i], P);
          ztrim(rem);
        }
        if (!rem.empty()) throw math_error("equal-degree split produced a non-divisor");
        rest = std::move(quo);
      }
      edf(rest, d, P, rng, out);
      return;
    }
  }
  throw math_error("equal-degree factorization did not split");
}

// full factorization of monic squarefree f over F_P
std::vector<ZPoly> factor_mod_p(ZPoly f, const Int& P, std::mt19937_64& rng) {
  std::vector<ZPoly> out;
  ZPoly h{Int(0), Int(1)};  // x
  int d = 0;
  while (static_cast<int>(f.size()) - 1 > 0) {
    ++d;
    if (2 * d > static_cast<int>(f.size()) - 1) {
      out.push_back(f);
      break;
    }
    h = zpowmod(h, P, f, P);
    ZPoly hx = h;
    // h - x
    if (hx.size() < 2) hx.resize(2, Int(0));
    hx[1] = mod_p(hx[1] - 1, P);
    ztrim(hx);
    ZPoly g = zgcd(f, hx, P);
    if (static_cast<int>(g.size()) - 1 > 0) {
      edf(g, d, P, rng, out);
      // f /= g
      ZPoly quo(f.size() - g.size() + 1, Int(0));
      ZPoly rem = f;
      while (rem.size() >= g.size()) {
        Int c = rem.back();
        size_t off = rem.size() - g.size();
        quo[off] = c;
        for (size_t i = 0; i < g.size(); ++i) rem[off + i] = mod_p(rem[off + i] - c * g[i], P);
        ztrim(rem);
      }
      if (!rem.empty()) throw math_error("distinct-degree split produced a non-divisor");
      f = std::move(quo);
      h = zrem(std::move(h), f, P);
    }
  }
  return out;
}

// --- lifting back to Z ---

Int symmetric_lift(const Int& v, const Int& P) {
  Int r = mod_p(v, P);
  if (2 * r > P) r -= P;
  return r;
}

IntPoly lift_symmetric(const ZPoly& a, const Int& P) {
  std::vector<Int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = symmetric_lift(a[i], P);
  return IntPoly(std::move(c));
}

// Landau-Mignotte style bound on coefficients of any integer factor of f
// (including the leading-coefficient correction).
Int coeff_bound(const IntPoly& f) {
  Int norm_sq(0);
  for (const auto& c : f.coeffs()) norm_sq += c * c;
  Int norm(1);
  while (norm * norm < norm_sq) norm *= 2;
  Int two_n(1);
  mpz_mul_2exp(two_n.get_mpz_t(), two_n.get_mpz_t(), f.degree() + 1);
  Int la = f.leading() < 0 ? Int(-f.leading()) : f.leading();
  return two_n * norm * la;
}

// rational roots of primitive f (as linear factors), dividing them out
std::vector<IntPoly> strip_rational_roots(IntPoly& f) {
  std::vector<IntPoly> out;
  bool again = true;
  while (again && f.degree() >= 1) {
    again = false;
    Int a0 = f.coeff(0);
    if (a0 == 0) {
      out.push_back(IntPoly::x());
      f = exact_div(f, IntPoly::x());
      again = true;
      continue;
    }
    Int an = f.leading();
    std::vector<Int> nums, dens;
    for (Int d(1); d * d <= (a0 < 0 ? Int(-a0) : a0); ++d) {
      if (a0 % d == 0) {
        nums.push_back(d);
        nums.push_back(a0 / d < 0 ? Int(-(a0 / d)) : a0 / d);
      }
    }
    for (Int d(1); d * d <= (an < 0 ? Int(-an) : an); ++d) {
      if (an % d == 0) {
        dens.push_back(d);
        dens.push_back(an / d < 0 ? Int(-(an / d)) : an / d);
      }
    }
    for (const Int& n : nums) {
      for (const Int& d : dens) {
        if (gcd(n, d) != 1) continue;
        for (int sgn : {1, -1}) {
          Rat r = Rat(sgn * n) / Rat(d);
          Rat v = to_rat(f).eval(r);
          if (v == 0) {
            IntPoly lin{Int(-sgn * n), d};
            out.push_back(primitive_part(lin));
            f = exact_div(f, primitive_part(lin));
            again = true;
            goto next_round;
          }
        }
      }
    }
  next_round:;
  }
  return out;
}

// primitive squarefree f of degree >= 1 -> primitive irreducible factors
std::vector<IntPoly> factor_squarefree(IntPoly f) {
  if (f.degree() <= 3) {
    // rational-root test; whatever is left of degree 2 or 3 is irreducible
    std::vector<IntPoly> out = strip_rational_roots(f);
    if (f.degree() >= 1) out.push_back(f);
    return out;
  }
  int d = f.degree();
  if (d > 8) throw math_error("factorization limited to squarefree degree <= 8");
  std::vector<IntPoly> out;

  // single big prime: larger than twice the factor coefficient bound, and
  // keeping f squarefree mod p
  Int P = 2 * coeff_bound(f) + 3;
  std::mt19937_64 rng(0x5eedULL);
  ZPoly fp;
  for (;;) {
    mpz_nextprime(P.get_mpz_t(), P.get_mpz_t());
    if (f.leading() % P == 0) continue;
    fp = zreduce(f, P);
    if (static_cast<int>(fp.size()) - 1 != d) continue;
    ZPoly g = zgcd(fp, zderiv(fp, P), P);
    if (static_cast<int>(g.size()) - 1 == 0) break;
  }
  std::vector<ZPoly> modular = factor_mod_p(zmonic(fp, P), P, rng);
  if (modular.size() == 1) {
    out.push_back(f);
    return out;
  }

  // Zassenhaus recombination: coefficients of true factors are recovered
  // directly since P exceeds twice the coefficient bound
  std::vector<bool> used(modular.size(), false);
  size_t remaining = modular.size();
  for (size_t size = 1; remaining > 0 && size <= remaining; ) {
    bool found = false;
    std::vector<size_t> idx;
    std::vector<size_t> avail;
    for (size_t i = 0; i < modular.size(); ++i)
      if (!used[i]) avail.push_back(i);
    // iterate over size-element subsets of avail
    std::vector<size_t> sel(size);
    for (size_t i = 0; i < size; ++i) sel[i] = i;
    while (true) {
      ZPoly prod{mod_p(f.leading(), P)};
      for (size_t i = 0; i < size; ++i) prod = zmul(prod, modular[avail[sel[i]]], P);
      IntPoly cand = primitive_part(lift_symmetric(prod, P));
      if (cand.degree() >= 1 && divides(to_rat(cand), to_rat(f))) {
        out.push_back(cand);
        f = exact_div(f, cand);
        for (size_t i = 0; i < size; ++i) used[avail[sel[i]]] = true;
        remaining -= size;
        found = true;
        break;
      }
      // next combination
      size_t k = size;
      while (k > 0 && sel[k - 1] == avail.size() - size + (k - 1)) --k;
      if (k == 0) break;
      ++sel[k - 1];
      for (size_t i = k; i < size; ++i) sel[i] = sel[i - 1] + 1;
    }
    if (!found) ++size;
  }
  if (f.degree() >= 1) out.push_back(f);
  return out;
}

}  // namespace

std::vector<std::pair<RatPoly, int>> factor_rational(const RatPoly& p) {
  if (p.is_zero()) throw math_error("cannot factor the zero polynomial");
  std::vector<std::pair<RatPoly, int>> out;
  for (const auto& [sf, mult] : yun_squarefree(p)) {
    IntPoly f = clear_denominators(sf);
    for (const IntPoly& g : factor_squarefree(f)) out.emplace_back(make_monic(to_rat(g)), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    for (int i = a.first.degree(); i >= 0; --i)
      if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
    return a.second < b.second;
  });
  return out;
}

std::vector<std::pair<RatPoly, int>> factor_rational(const IntPoly& p) {
  return factor_rational(to_rat(p));
}

std::vector<RatPoly> distinct_irreducible_factors(const RatPoly& p) {
  std::vector<RatPoly> out;
  for (const auto& [f, mult] : factor_rational(p))
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  return out;
}

bool is_irreducible(const RatPoly& p) {
  if (p.degree() < 1) return false;
  auto fs = factor_rational(p);
  return fs.size() == 1 && fs[0].second == 1;
}

RatPoly radical(const RatPoly& p) {
  RatPoly r = RatPoly::constant(Rat(1));
  for (const auto& f : distinct_irreducible_factors(p)) r = r * f;
  return r;
}

}  // namespace tiling
