#pragma once

#include <vector>

#include "affinetile/poly.hpp"

namespace tiling {

// Dense matrix over an exact ring/field T (row-major).
template <class T>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(size_t r, size_t c) : r_(r), c_(c), v_(r * c, T(0)) {}
  Mat(size_t r, size_t c, std::vector<T> v) : r_(r), c_(c), v_(std::move(v)) {
    if (v_.size() != r_ * c_) throw math_error("matrix shape mismatch");
  }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  bool is_square() const { return r_ == c_; }

  T& operator()(size_t i, size_t j) { return v_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return v_[i * c_ + j]; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  friend Mat operator+(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw math_error("matrix addition shape mismatch");
    Mat r = a;
    for (size_t i = 0; i < r.v_.size(); ++i) r.v_[i] += b.v_[i];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw math_error("matrix subtraction shape mismatch");
    Mat r = a;
    for (size_t i = 0; i < r.v_.size(); ++i) r.v_[i] -= b.v_[i];
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.c_ != b.r_) throw math_error("matrix product shape mismatch");
    Mat r(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t k = 0; k < a.c_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (size_t j = 0; j < b.c_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Mat operator*(const T& s, const Mat& a) {
    Mat r = a;
    for (auto& v : r.v_) v = s * v;
    return r;
  }
  friend std::vector<T> operator*(const Mat& a, const std::vector<T>& x) {
    if (a.c_ != x.size()) throw math_error("matrix-vector shape mismatch");
    std::vector<T> r(a.r_, T(0));
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t j = 0; j < a.c_; ++j) r[i] += a(i, j) * x[j];
    return r;
  }

  Mat transpose() const {
    Mat r(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  T trace() const {
    if (!is_square()) throw math_error("trace of non-square matrix");
    T t(0);
    for (size_t i = 0; i < r_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  size_t r_, c_;
  std::vector<T> v_;
};

using RatMat = Mat<Rat>;
using IntMat = Mat<Int>;

template <class T>
Mat<T> mat_pow(Mat<T> a, unsigned long e) {
  if (!a.is_square()) throw math_error("power of non-square matrix");
  Mat<T> r = Mat<T>::identity(a.rows());
  while (e > 0) {
    if (e & 1) r = r * a;
    e >>= 1;
    if (e > 0) a = a * a;
  }
  return r;
}

// Solve A x = b over a field by Gaussian elimination; throws on singular A.
template <class T>
std::vector<T> solve_linear(Mat<T> a, std::vector<T> b) {
  if (!a.is_square() || a.rows() != b.size()) throw math_error("solve_linear shape mismatch");
  size_t n = a.rows();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a(piv, col) == T(0)) ++piv;
    if (piv == n) throw math_error("singular linear system");
    if (piv != col) {
      for (size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      std::swap(b[piv], b[col]);
    }
    T inv = T(1) / a(col, col);
    for (size_t j = col; j < n; ++j) a(col, j) = inv * a(col, j);
    b[col] = inv * b[col];
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == T(0)) continue;
      T f = a(i, col);
      for (size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      b[i] -= f * b[col];
    }
  }
  return b;
}

template <class T>
Mat<T> inverse(const Mat<T>& a) {
  if (!a.is_square()) throw math_error("inverse of non-square matrix");
  size_t n = a.rows();
  Mat<T> inv(n, n);
  for (size_t k = 0; k < n; ++k) {
    std::vector<T> e(n, T(0));
    e[k] = T(1);
    std::vector<T> col = solve_linear(a, e);
    for (size_t i = 0; i < n; ++i) inv(i, k) = col[i];
  }
  return inv;
}

template <class T>
size_t rank(Mat<T> a) {
  size_t n = a.rows(), m = a.cols(), r = 0;
  for (size_t col = 0; col < m && r < n; ++col) {
    size_t piv = r;
    while (piv < n && a(piv, col) == T(0)) ++piv;
    if (piv == n) continue;
    for (size_t j = 0; j < m; ++j) std::swap(a(piv, j), a(r, j));
    T inv = T(1) / a(r, col);
    for (size_t j = col; j < m; ++j) a(r, j) = inv * a(r, j);
    for (size_t i = 0; i < n; ++i) {
      if (i == r || a(i, col) == T(0)) continue;
      T f = a(i, col);
      for (size_t j = col; j < m; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

// Characteristic polynomial (monic, degree n) by Faddeev-LeVerrier.
RatPoly char_poly(const RatMat& a);
RatPoly char_poly(const IntMat& a);

Rat det(const RatMat& a);
Int det(const IntMat& a);

RatMat to_rat(const IntMat& a);

// p(A)
RatMat eval_matrix(const RatPoly& p, const RatMat& a);

// exact test: A diagonalizable over C iff radical(char_poly)(A) = 0
bool is_diagonalizable(const RatMat& a);

// Column-style Hermite normal form of the lattice spanned by the columns of
// g: pivot entries positive, entries left of a pivot reduced to [0, pivot).
// Zero columns are dropped; equal column spans give identical results.
IntMat hnf_columns(const IntMat& g);

}  // namespace tiling
