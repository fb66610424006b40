#include "affinetile/poly.hpp"

#include <sstream>

namespace tiling {

RatPoly to_rat(const IntPoly& p) {
  std::vector<Rat> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

IntPoly clear_denominators(const RatPoly& p) {
  Int den = 1;
  for (const auto& q : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Int> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) {
    Rat scaled = q * Rat(den);
    c.push_back(scaled.get_num());
  }
  IntPoly r{IntPoly(std::move(c))};
  return primitive_part(r);
}

Int content(const IntPoly& p) {
  Int g = 0;
  for (const auto& v : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Int g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Int> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(v / g);
  return IntPoly(std::move(c));
}

bool is_monic(const IntPoly& p) { return !p.is_zero() && p.leading() == 1; }
bool is_monic(const RatPoly& p) { return !p.is_zero() && p.leading() == 1; }

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) throw math_error("make_monic of zero polynomial");
  Rat inv = 1 / p.leading();
  return inv * p;
}

bool is_integral(const RatPoly& p) {
  for (const auto& q : p.coeffs())
    if (q.get_den() != 1) return false;
  return true;
}

IntPoly to_int_checked(const RatPoly& p) {
  if (!is_integral(p)) throw math_error("polynomial has non-integer coefficients: " + to_string(p));
  std::vector<Int> c;
  for (const auto& q : p.coeffs()) c.push_back(q.get_num());
  return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw math_error("polynomial division by zero");
  std::vector<Rat> rem(a.coeffs());
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {RatPoly(), a};
  std::vector<Rat> quot(da - db + 1, Rat(0));
  Rat lead_inv = 1 / b.leading();
  for (int i = da; i >= db; --i) {
    Rat q = rem[i] * lead_inv;
    if (q == 0) continue;
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw math_error("polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  int da = a.degree(), db = b.degree();
  if (da < db) throw math_error("exact_div: degree mismatch");
  std::vector<Int> rem(a.coeffs());
  std::vector<Int> quot(da - db + 1, Int(0));
  for (int i = da; i >= db; --i) {
    if (rem[i] == 0) continue;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), b.leading().get_mpz_t());
    if (r != 0) throw math_error("exact_div: not divisible");
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
  }
  for (const auto& v : rem)
    if (v != 0) throw math_error("exact_div: nonzero remainder");
  return IntPoly(std::move(quot));
}

bool divides(const RatPoly& b, const RatPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divrem(a, b).second.is_zero();
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divrem(x, y).second;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return make_monic(x);
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  RatPoly g = gcd(to_rat(a), to_rat(b));
  if (g.is_zero()) return IntPoly();
  return clear_denominators(g);
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) throw math_error("squarefree_part of zero polynomial");
  RatPoly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return make_monic(p);
  return make_monic(divrem(p, g).first);
}

IntPoly squarefree_part(const IntPoly& p) { return clear_denominators(squarefree_part(to_rat(p))); }

bool is_squarefree(const IntPoly& p) {
  if (p.is_zero()) return false;
  return gcd(to_rat(p), to_rat(p).derivative()).degree() <= 0;
}

std::vector<std::pair<RatPoly, int>> yun_squarefree(const RatPoly& p_in) {
  if (p_in.is_zero()) throw math_error("squarefree decomposition of zero polynomial");
  RatPoly p = make_monic(p_in);
  std::vector<std::pair<RatPoly, int>> out;
  if (p.degree() == 0) return out;
  RatPoly dp = p.derivative();
  RatPoly a = gcd(p, dp);
  RatPoly b = divrem(p, a).first;
  RatPoly c = divrem(dp, a).first;
  RatPoly d = c - b.derivative();
  int mult = 1;
  while (b.degree() > 0) {
    RatPoly f = gcd(b, d);
    if (f.degree() > 0) out.emplace_back(f, mult);
    b = divrem(b, f).first;
    c = divrem(d, f).first;
    d = c - b.derivative();
    ++mult;
  }
  return out;
}

// Bareiss determinant of a square matrix of integer polynomials.
static IntPoly poly_det_bareiss(std::vector<std::vector<IntPoly>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return IntPoly{Int(1)};
  int sign = 1;
  IntPoly prev_pivot{Int(1)};
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return IntPoly();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        IntPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num.is_zero() ? IntPoly() : exact_div(num, prev_pivot);
      }
      m[i][k] = IntPoly();
    }
    prev_pivot = m[k][k];
  }
  IntPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

IntPoly composed_product(const IntPoly& p, const IntPoly& q) {
  if (!is_monic(p) || !is_monic(q)) throw math_error("composed_product requires monic inputs");
  int n = p.degree(), m = q.degree();
  if (n == 0 || m == 0) throw math_error("composed_product requires positive degrees");
  if (q.coeff(0) == 0 || p.coeff(0) == 0)
    throw math_error("composed_product requires nonzero constant terms");
  // Sylvester matrix in y of A(y) = p(y) and B(y) = sum_i q_i x^i y^(m-i),
  // entries in Z[x].  Res_y has roots {ab : p(a)=0, q(b)=0}.
  int size = n + m;
  std::vector<std::vector<IntPoly>> s(size, std::vector<IntPoly>(size));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[r][r + n - i] = IntPoly{p.coeff(i)};
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) {
      // coefficient of y^(m-i) in B is q_i x^i
      IntPoly cell = IntPoly{q.coeff(i)}.shifted(i);
      s[m + r][r + i] = cell;
    }
  IntPoly res = poly_det_bareiss(std::move(s));
  if (res.is_zero()) throw math_error("composed_product: vanishing resultant");
  if (res.leading() < 0) res = -res;
  if (res.leading() != 1) throw math_error("composed_product: non-monic result");
  if (res.degree() != n * m) throw math_error("composed_product: unexpected degree");
  return res;
}

template <class P>
static std::string poly_str(const P& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    auto c = p.coeff(i);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    auto a = c < 0 ? decltype(c)(-c) : c;
    first = false;
    if (i == 0 || a != 1) os << to_string(a);
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::string to_string(const IntPoly& p) { return poly_str(p); }
std::string to_string(const RatPoly& p) { return poly_str(p); }

}  // namespace tiling
