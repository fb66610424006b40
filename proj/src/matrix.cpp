#include "affinetile/matrix.hpp"

#include "affinetile/factor.hpp"

namespace tiling {

RatMat to_rat(const IntMat& a) {
  RatMat r(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
  return r;
}

RatPoly char_poly(const RatMat& a) {
  if (!a.is_square()) throw math_error("char_poly of non-square matrix");
  size_t n = a.rows();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = Rat(1);
  RatMat m = RatMat::identity(n);
  for (size_t k = 1; k <= n; ++k) {
    m = a * m;
    Rat ck = -m.trace() / Rat(static_cast<long>(k));
    c[n - k] = ck;
    for (size_t i = 0; i < n; ++i) m(i, i) += ck;
  }
  return RatPoly(std::move(c));
}

RatPoly char_poly(const IntMat& a) { return char_poly(to_rat(a)); }

Rat det(const RatMat& a) {
  RatPoly p = char_poly(a);
  Rat d = p.coeff(0);
  return a.rows() % 2 == 0 ? d : -d;
}

Int det(const IntMat& a) {
  Rat d = det(to_rat(a));
  if (d.get_den() != 1) throw math_error("integer determinant is not integral");
  return d.get_num();
}

RatMat eval_matrix(const RatPoly& p, const RatMat& a) {
  if (!a.is_square()) throw math_error("eval_matrix needs a square matrix");
  size_t n = a.rows();
  RatMat acc(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * a;
    Rat ci = p.coeff(i);
    for (size_t k = 0; k < n; ++k) acc(k, k) += ci;
  }
  return acc;
}

bool is_diagonalizable(const RatMat& a) {
  RatPoly rad = radical(char_poly(a));
  return eval_matrix(rad, a) == RatMat(a.rows(), a.rows());
}

IntMat hnf_columns(const IntMat& g) {
  size_t m = g.rows(), k = g.cols();
  // columns as vectors
  std::vector<std::vector<Int>> cols(k, std::vector<Int>(m));
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < m; ++i) cols[j][i] = g(i, j);

  std::vector<std::vector<Int>> piv_cols;
  std::vector<size_t> piv_rows;
  size_t start = 0;  // columns before start are finished pivots
  for (size_t row = 0; row < m; ++row) {
    // make all but one column zero at this row via extended gcd column ops
    size_t lead = start;
    while (lead < cols.size() && cols[lead][row] == 0) ++lead;
    if (lead == cols.size()) continue;
    std::swap(cols[start], cols[lead]);
    for (size_t j = start + 1; j < cols.size(); ++j) {
      if (cols[j][row] == 0) continue;
      Int a = cols[start][row], b = cols[j][row], gg, u, v;
      mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int s = a / gg, t = b / gg;
      for (size_t i = 0; i < m; ++i) {
        Int ci = cols[start][i], cj = cols[j][i];
        cols[start][i] = u * ci + v * cj;
        cols[j][i] = s * cj - t * ci;
      }
    }
    if (cols[start][row] < 0)
      for (size_t i = 0; i < m; ++i) cols[start][i] = -cols[start][i];
    // reduce this row in the earlier pivot columns to [0, pivot)
    Int p = cols[start][row];
    for (auto& pc : piv_cols) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), pc[row].get_mpz_t(), p.get_mpz_t());
      if (q != 0)
        for (size_t i = 0; i < m; ++i) pc[i] -= q * cols[start][i];
    }
    piv_cols.push_back(cols[start]);
    piv_rows.push_back(row);
    ++start;
  }

  IntMat h(m, piv_cols.size());
  for (size_t j = 0; j < piv_cols.size(); ++j)
    for (size_t i = 0; i < m; ++i) h(i, j) = piv_cols[j][i];
  return h;
}

}  // namespace tiling
