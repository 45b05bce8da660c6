#pragma once

// Matrices with polynomial entries: fraction-free determinants and adjugates.

#include <span>
#include <string>
#include <vector>

#include "cstkit/poly.hpp"

namespace cstkit {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), a_(rows * cols, Poly(nvars)) {}

  static PolyMatrix identity(std::size_t n, std::size_t nvars) {
    PolyMatrix m(n, n, nvars);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(nvars, 1);
    return m;
  }

  /// Builds from row-major entries; all entries must share nvars.
  static PolyMatrix from_rows(const std::vector<std::vector<Poly>>& rows) {
    if (rows.empty() || rows[0].empty()) fail(ErrorKind::ShapeError, "empty matrix");
    PolyMatrix m(rows.size(), rows[0].size(), rows[0][0].nvars());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) fail(ErrorKind::ShapeError, "ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (rows[i][j].nvars() != m.nvars_) fail(ErrorKind::ArityMismatch, "entries in different rings");
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }
  bool is_square() const { return rows_ == cols_; }

  Poly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::ShapeError, "product shape mismatch");
    PolyMatrix out(a.rows_, b.cols_, a.nvars_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  PolyMatrix with_column(std::size_t j, std::span<const Poly> column) const {
    if (column.size() != rows_) fail(ErrorKind::ShapeError, "column length mismatch");
    PolyMatrix m = *this;
    for (std::size_t i = 0; i < rows_; ++i) m(i, j) = column[i];
    return m;
  }

  PolyMatrix minor_matrix(std::size_t skip_row, std::size_t skip_col) const {
    PolyMatrix m(rows_ - 1, cols_ - 1, nvars_);
    for (std::size_t i = 0, r = 0; i < rows_; ++i) {
      if (i == skip_row) continue;
      for (std::size_t j = 0, c = 0; j < cols_; ++j) {
        if (j == skip_col) continue;
        m(r, c++) = (*this)(i, j);
      }
      ++r;
    }
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Poly> a_;
};

namespace detail {

// Fraction-free forward elimination on the first `n` columns of m (n = m.rows()).
// Updates every column to the right as well. Returns the row-swap sign, or 0 if singular.
inline int bareiss_forward(PolyMatrix& m) {
  const std::size_t n = m.rows();
  int sign = 1;
  Poly prev = Poly::constant(m.nvars(), 1);
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k).is_zero()) {
      // pick the sparsest nonzero pivot below
      std::size_t best = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero() && (best == n || m(i, k).size() < m(best, k).size())) best = i;
      if (best == n) return 0;
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(k, j), m(best, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        Poly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = k == 0 ? std::move(num) : poly_exact_divide(num, prev);
      }
      m(i, k) = Poly(m.nvars());
    }
    prev = m(k, k);
  }
  return sign;
}

}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination.
inline Poly poly_det(const PolyMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::ShapeError, "determinant of a non-square matrix");
  if (a.rows() == 0) return Poly::constant(a.nvars(), 1);
  PolyMatrix m = a;
  const int sign = detail::bareiss_forward(m);
  if (sign == 0) return Poly(a.nvars());
  const Poly& d = m(a.rows() - 1, a.rows() - 1);
  return sign > 0 ? d : -d;
}

/// Determinant by Laplace expansion along the first row; exponential, intended for small checks.
inline Poly poly_det_cofactor(const PolyMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::ShapeError, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Poly::constant(a.nvars(), 1);
  if (n == 1) return a(0, 0);
  Poly out(a.nvars());
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    Poly t = a(0, j) * poly_det_cofactor(a.minor_matrix(0, j));
    if (j % 2) out -= t;
    else out += t;
  }
  return out;
}

struct DetAdjugate {
  Poly det;
  PolyMatrix adjugate;
};

/// det(A) and adj(A) from one fraction-free elimination of [A | I] plus exact back substitution.
inline DetAdjugate poly_det_adjugate(const PolyMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::ShapeError, "adjugate of a non-square matrix");
  const std::size_t n = a.rows();
  const std::size_t nv = a.nvars();
  PolyMatrix m(n, 2 * n, nv);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = Poly::constant(nv, 1);
  }
  const int sign = detail::bareiss_forward(m);
  if (sign == 0) fail(ErrorKind::SingularMatrix, "adjugate requested for a singular polynomial matrix");
  const Poly pivot_det = m(n - 1, n - 1);  // det(PA)
  Poly det = sign > 0 ? pivot_det : -pivot_det;
  // U Y = det(A) B, Y = adj(A)
  PolyMatrix adj(n, n, nv);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c = 0; c < n; ++c) {
      Poly num = det * m(i, n + c);
      for (std::size_t j = i + 1; j < n; ++j)
        if (!m(i, j).is_zero() && !adj(j, c).is_zero()) num -= m(i, j) * adj(j, c);
      adj(i, c) = poly_exact_divide(num, m(i, i));
    }
  }
  return {std::move(det), std::move(adj)};
}

/// Determinant of (d fs_i / d z_j).
inline Poly poly_jacobian_det(std::span<const Poly> fs) {
  if (fs.empty()) fail(ErrorKind::ArityMismatch, "empty jacobian");
  const std::size_t n = fs[0].nvars();
  if (fs.size() != n)
    fail(ErrorKind::ArityMismatch, "jacobian needs " + std::to_string(n) + " functions, got " + std::to_string(fs.size()));
  PolyMatrix jac(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (fs[i].nvars() != n) fail(ErrorKind::ArityMismatch, "functions live in different rings");
    for (std::size_t j = 0; j < n; ++j) jac(i, j) = fs[i].derivative(j);
  }
  return poly_det(jac);
}

}  // namespace cstkit
