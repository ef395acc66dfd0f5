#include "gmconn/linalg.hpp"

#include <string>

namespace gmconn {

Matrix<RatFunc> zero_matrix(std::size_t rows, std::size_t cols, int nvars) {
  return Matrix<RatFunc>(rows, cols, RatFunc(nvars));
}

Matrix<RatFunc> identity_matrix(std::size_t n, int nvars) {
  Matrix<RatFunc> out = zero_matrix(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = RatFunc::constant(nvars, Rational(1));
  return out;
}

namespace {

bool empty(const Matrix<RatFunc>& a) { return a.rows() == 0 || a.cols() == 0; }

int nvars_of(const Matrix<RatFunc>& a) { return empty(a) ? 0 : a(0, 0).nvars(); }

}  // namespace

Matrix<RatFunc> operator*(const Matrix<RatFunc>& a, const Matrix<RatFunc>& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product shape mismatch");
  const int nvars = empty(a) ? nvars_of(b) : nvars_of(a);
  Matrix<RatFunc> out = zero_matrix(a.rows(), b.cols(), nvars);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

Matrix<RatFunc> operator+(const Matrix<RatFunc>& a, const Matrix<RatFunc>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix sum shape mismatch");
  Matrix<RatFunc> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

Matrix<RatFunc> operator-(const Matrix<RatFunc>& a, const Matrix<RatFunc>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix difference shape mismatch");
  Matrix<RatFunc> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

Matrix<RatFunc> solve_square(Matrix<RatFunc> a, Matrix<RatFunc> b) {
  const std::size_t n = a.rows();
  if (n != a.cols() || b.rows() != n) throw InvalidInput("solve_square shape mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = c; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      if (!pivot || a(i, c).size() < a(*pivot, c).size()) pivot = i;
    }
    if (!pivot) throw InconsistentSystem("singular block at column " + std::to_string(c + 1));
    a.swap_rows(*pivot, c);
    b.swap_rows(*pivot, c);
    const RatFunc inv = RatFunc::constant(a(c, c).nvars(), Rational(1)) / a(c, c);
    for (std::size_t j = c; j < n; ++j) a(c, j) *= inv;
    for (std::size_t j = 0; j < b.cols(); ++j) b(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const RatFunc f = a(i, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(c, j);
    }
  }
  return b;
}

std::vector<std::size_t> independent_rows(const Matrix<RatFunc>& a) {
  // Reduced basis rows, each with a distinct pivot column normalized to 1.
  std::vector<std::vector<RatFunc>> basis;
  std::vector<std::size_t> basis_pivot;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<RatFunc> row(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const RatFunc f = row[basis_pivot[k]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!basis[k][j].is_zero()) row[j] -= f * basis[k][j];
      }
    }
    std::optional<std::size_t> pivot;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!row[j].is_zero()) {
        pivot = j;
        break;
      }
    }
    if (!pivot) continue;
    const RatFunc inv = RatFunc::constant(row[*pivot].nvars(), Rational(1)) / row[*pivot];
    for (RatFunc& x : row) x *= inv;
    basis.push_back(std::move(row));
    basis_pivot.push_back(*pivot);
    chosen.push_back(i);
    if (basis.size() == a.cols()) break;
  }
  return chosen;
}

}  // namespace gmconn
