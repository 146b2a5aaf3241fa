#pragma once

#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

#include "lnk/errors.hpp"
#include "lnk/numbers.hpp"
#include "lnk/ratfun.hpp"

namespace lnk {

// Dense row-major matrix over an exact scalar ring.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_)
        fail(errc::dimension_mismatch, "ragged matrix initializer");
      for (const auto& x : r) e_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows,
               std::size_t cols) const {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      fail(errc::dimension_mismatch, "matrix addition shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] + b.e_[k];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      fail(errc::dimension_mismatch, "matrix subtraction shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] - b.e_[k];
    return m;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = s * a.e_[k];
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      fail(errc::dimension_mismatch, "matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          m(i, j) += aik * b(k, j);
      }
    return m;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> e_;
};

// The fraction field each scalar kind embeds into.
template <class T>
struct field_of {
  using type = T;
};
template <>
struct field_of<Int> {
  using type = Rational;
};
template <>
struct field_of<LaurentPolynomial> {
  using type = RationalFunction;
};
template <class T>
using field_of_t = typename field_of<T>::type;
template <class T>
inline constexpr bool is_field_scalar_v = std::is_same_v<T, field_of_t<T>>;

inline Rational to_field(const Int& x) { return Rational(x); }
inline Rational to_field(const Rational& x) { return x; }
inline RationalFunction to_field(const LaurentPolynomial& x) {
  return RationalFunction(x);
}
inline RationalFunction to_field(const RationalFunction& x) { return x; }

template <class S, class T>
Matrix<S> convert_matrix(const Matrix<T>& a) {
  Matrix<S> m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = S(a(i, j));
  return m;
}

namespace detail {

// Fraction-free (Bareiss) forward elimination; divisions stay exact in the
// ring. Returns the sign from row swaps, or 0 when the left square part is
// singular. On exit w is upper triangular with w(k,k) the leading principal
// k+1-minor (times the swap sign pattern).
template <class T>
int bareiss_forward(Matrix<T>& w, std::size_t n) {
  int sign = 1;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == T(0)) {
      std::size_t p = k + 1;
      while (p < n && w(p, k) == T(0)) ++p;
      if (p == n) return 0;
      w.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < w.cols(); ++j) {
        T num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        if constexpr (std::is_same_v<T, Int>)
          w(i, j) = num / prev;
        else
          w(i, j) = num.divided_exactly_by(prev);
      }
      w(i, k) = T(0);
    }
    prev = w(k, k);
  }
  if (n > 0 && w(n - 1, n - 1) == T(0)) return 0;
  return sign;
}

// Plain Gaussian forward elimination over a field, normalizing after each
// step. Same return contract as bareiss_forward, except the determinant is
// the product of the diagonal (times the sign).
template <class T>
int gauss_forward(Matrix<T>& w, std::size_t n) {
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == T(0)) {
      std::size_t p = k + 1;
      while (p < n && w(p, k) == T(0)) ++p;
      if (p == n) return 0;
      w.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (w(i, k) == T(0)) continue;
      T f = w(i, k) / w(k, k);
      for (std::size_t j = k + 1; j < w.cols(); ++j)
        w(i, j) = w(i, j) - f * w(k, j);
      w(i, k) = T(0);
    }
  }
  if (n > 0 && w(n - 1, n - 1) == T(0)) return 0;
  return sign;
}

}  // namespace detail

// Exact determinant in the entry ring: fraction-free elimination for the
// ring kinds, field elimination for the field kinds. The empty matrix has
// determinant 1.
template <class T>
T det(const Matrix<T>& a) {
  if (!a.is_square()) fail(errc::not_square, "determinant of a nonsquare matrix");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  Matrix<T> w = a;
  if constexpr (is_field_scalar_v<T>) {
    int sign = detail::gauss_forward(w, n);
    if (sign == 0) return T(0);
    T d(sign);
    for (std::size_t k = 0; k < n; ++k) d *= w(k, k);
    return d;
  } else {
    int sign = detail::bareiss_forward(w, n);
    if (sign == 0) return T(0);
    return sign > 0 ? w(n - 1, n - 1) : T(0) - w(n - 1, n - 1);
  }
}

// Exact solution of A x = b over the fraction field of the entry ring.
template <class T>
std::vector<field_of_t<T>> solve(const Matrix<T>& a,
                                 const std::vector<T>& b) {
  using F = field_of_t<T>;
  if (!a.is_square()) fail(errc::not_square, "solve needs a square matrix");
  const std::size_t n = a.rows();
  if (b.size() != n) fail(errc::dimension_mismatch, "solve rhs length");
  if (n == 0) return {};
  Matrix<T> w(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
    w(i, n) = b[i];
  }
  int sign;
  if constexpr (is_field_scalar_v<T>)
    sign = detail::gauss_forward(w, n);
  else
    sign = detail::bareiss_forward(w, n);
  if (sign == 0) fail(errc::singular_matrix, "singular linear system");
  std::vector<F> x(n);
  for (std::size_t i = n; i-- > 0;) {
    F acc = to_field(w(i, n));
    for (std::size_t j = i + 1; j < n; ++j)
      acc = acc - to_field(w(i, j)) * x[j];
    x[i] = acc / to_field(w(i, i));
  }
  return x;
}

// v A^{-1} w^T through a single linear solve.
template <class T>
field_of_t<T> inverse_bilinear(const std::vector<T>& v, const Matrix<T>& a,
                               const std::vector<T>& w) {
  using F = field_of_t<T>;
  if (!a.is_square()) fail(errc::not_square, "bilinear form needs a square matrix");
  if (v.size() != a.rows() || w.size() != a.rows())
    fail(errc::dimension_mismatch, "bilinear form vector length");
  if (a.rows() == 0) return F(0);
  std::vector<F> x = solve(a, w);
  F acc(0);
  for (std::size_t i = 0; i < v.size(); ++i) acc = acc + to_field(v[i]) * x[i];
  return acc;
}

// Field matrix inverse by Gauss-Jordan elimination.
template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  static_assert(is_field_scalar_v<T>, "inverse needs field entries");
  if (!a.is_square()) fail(errc::not_square, "inverse of a nonsquare matrix");
  const std::size_t n = a.rows();
  Matrix<T> w(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
    w(i, n + i) = T(1);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && w(p, k) == T(0)) ++p;
    if (p == n) fail(errc::singular_matrix, "inverse of a singular matrix");
    if (p != k) w.swap_rows(k, p);
    T piv = w(k, k);
    for (std::size_t j = k; j < 2 * n; ++j) w(k, j) = w(k, j) / piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || w(i, k) == T(0)) continue;
      T f = w(i, k);
      for (std::size_t j = k; j < 2 * n; ++j) w(i, j) = w(i, j) - f * w(k, j);
    }
  }
  return w.block(0, n, n, n);
}

}  // namespace lnk
