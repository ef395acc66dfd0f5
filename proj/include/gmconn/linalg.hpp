#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gmconn/error.hpp"
#include "gmconn/multipoly.hpp"
#include "gmconn/pathpoly.hpp"
#include "gmconn/ratfunc.hpp"
#include "gmconn/rational.hpp"

namespace gmconn {

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Entry-type hooks used by the generic elimination routines.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const PathPoly& x) { return x.is_zero(); }
inline bool is_zero(const MultiPoly& x) { return x.is_zero(); }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

inline std::size_t entry_size(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}
inline std::size_t entry_size(const PathPoly& x) { return x.size(); }
inline std::size_t entry_size(const MultiPoly& x) { return x.size(); }
inline std::size_t entry_size(const RatFunc& x) { return x.size(); }

inline Rational one_like(const Rational&) { return Rational(1); }
inline PathPoly one_like(const PathPoly&) { return PathPoly(Rational(1)); }
inline MultiPoly one_like(const MultiPoly& x) { return MultiPoly::constant(x.nvars(), Rational(1)); }
inline RatFunc one_like(const RatFunc& x) { return RatFunc::constant(x.nvars(), Rational(1)); }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline PathPoly zero_like(const PathPoly&) { return PathPoly(); }
inline MultiPoly zero_like(const MultiPoly& x) { return MultiPoly(x.nvars()); }
inline RatFunc zero_like(const RatFunc& x) { return RatFunc(x.nvars()); }

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline PathPoly exact_quotient(const PathPoly& a, const PathPoly& b) { return divide_exact(a, b); }
inline MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) { return divide_exact(a, b); }

// Determinant of a square matrix by fraction-free (Bareiss) elimination.
template <class T>
T bareiss_determinant(Matrix<T> a) {
  const std::size_t n = a.rows();
  if (n != a.cols() || n == 0) throw InvalidInput("determinant needs a nonempty square matrix");
  T prev = one_like(a(0, 0));
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = k; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      if (!pivot || entry_size(a(i, k)) < entry_size(a(*pivot, k))) pivot = i;
    }
    if (!pivot) return zero_like(a(0, 0));
    if (*pivot != k) {
      a.swap_rows(*pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = exact_quotient(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = zero_like(a(0, 0));
    }
    prev = a(k, k);
  }
  return negate ? T(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

// Fraction-free row echelon form. Pivots are searched only in the first
// `pivot_cols` columns, left to right; among candidate rows the entry of
// smallest size wins. Returns the pivot column of each pivot row (row i of
// the result has its pivot at pivots[i]); rows past pivots.size() are zero
// in the first `pivot_cols` columns.
template <class T>
std::vector<std::size_t> fraction_free_echelon(Matrix<T>& a, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  if (a.rows() == 0 || a.cols() == 0) return pivots;
  const T zero = zero_like(a(0, 0));
  T prev = one_like(a(0, 0));
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < a.rows(); ++c) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (is_zero(a(i, c))) continue;
      if (!pivot || entry_size(a(i, c)) < entry_size(a(*pivot, c))) pivot = i;
    }
    if (!pivot) continue;
    a.swap_rows(*pivot, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      // Rows below still need the Bareiss update even when a(i, c) is zero,
      // to keep the common divisor consistent.
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        a(i, j) = exact_quotient(a(r, c) * a(i, j) - a(i, c) * a(r, j), prev);
      }
      a(i, c) = zero;
    }
    prev = a(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Solves A X = B over the rational function field for square invertible A.
// Throws InconsistentSystem when A is singular.
Matrix<RatFunc> solve_square(Matrix<RatFunc> a, Matrix<RatFunc> b);

// Indices of the lexicographically first maximal set of linearly
// independent rows.
std::vector<std::size_t> independent_rows(const Matrix<RatFunc>& a);

Matrix<RatFunc> operator*(const Matrix<RatFunc>& a, const Matrix<RatFunc>& b);
Matrix<RatFunc> operator-(const Matrix<RatFunc>& a, const Matrix<RatFunc>& b);
Matrix<RatFunc> operator+(const Matrix<RatFunc>& a, const Matrix<RatFunc>& b);

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  if (a.rows() == 0 || a.cols() == 0) return Matrix<T>();
  Matrix<T> out(a.cols(), a.rows(), a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

Matrix<RatFunc> zero_matrix(std::size_t rows, std::size_t cols, int nvars);
Matrix<RatFunc> identity_matrix(std::size_t n, int nvars);

}  // namespace gmconn
