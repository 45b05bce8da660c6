#pragma once

// Dense matrices over the cyclotomic field, with exact Gaussian elimination.

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cstkit/cyclotomic.hpp"
#include "cstkit/error.hpp"

namespace cstkit {

class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  CycMatrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) fail(ErrorKind::ShapeError, "entry count does not match shape");
  }

  static CycMatrix identity(std::size_t n) {
    CycMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static CycMatrix diagonal(const std::vector<Cyclotomic>& d) {
    CycMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Cyclotomic& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  /// lcm of entry conductors.
  int conductor() const {
    int n = 1;
    for (const auto& x : a_) n = std::lcm(n, x.conductor());
    return n;
  }

  CycMatrix lift(int m) const {
    CycMatrix out = *this;
    for (auto& x : out.a_) x = x.lift(m);
    return out;
  }

  CycMatrix conj() const {
    CycMatrix out = *this;
    for (auto& x : out.a_) x = x.conj();
    return out;
  }

  CycMatrix transpose() const {
    CycMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  CycMatrix adjoint() const { return conj().transpose(); }

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::ShapeError, "matrix product shape mismatch");
    CycMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Cyclotomic& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    return out;
  }

  friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::ShapeError, "matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }

  friend CycMatrix operator*(const Cyclotomic& s, CycMatrix m) {
    for (auto& x : m.a_) x = s * x;
    return m;
  }

  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }

  bool is_identity() const { return is_square() && *this == identity(rows_); }
  bool is_unitary() const { return is_square() && (adjoint() * *this).is_identity(); }

  /// True when every row and column holds exactly one nonzero entry.
  bool is_monomial() const {
    if (!is_square()) return false;
    std::vector<int> col_count(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      int row_count = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) {
          ++row_count;
          ++col_count[j];
        }
      if (row_count != 1) return false;
    }
    for (int c : col_count)
      if (c != 1) return false;
    return true;
  }

  Cyclotomic trace() const {
    Cyclotomic t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  std::size_t rank() const;
  Cyclotomic det() const;
  CycMatrix inverse() const;

  /// Canonical text used for hashing and deterministic ordering.
  std::string key() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += (*this)(i, j).to_string();
      }
      s += "]";
    }
    return s;
  }

  static CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
    CycMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l) out(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
    return out;
  }

  static CycMatrix block_diagonal(const CycMatrix& a, const CycMatrix& b) {
    CycMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) out(a.rows_ + i, a.cols_ + j) = b(i, j);
    return out;
  }

  CycMatrix sub_block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    CycMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cyclotomic> a_;
};

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(CycMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Cyclotomic inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Cyclotomic f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t CycMatrix::rank() const {
  CycMatrix m = *this;
  return row_reduce(m).size();
}

inline Cyclotomic CycMatrix::det() const {
  if (!is_square()) fail(ErrorKind::ShapeError, "determinant of non-square matrix");
  CycMatrix m = *this;
  Cyclotomic d = 1;
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Cyclotomic::zero(conductor());
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    const Cyclotomic inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Cyclotomic f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

inline CycMatrix CycMatrix::inverse() const {
  if (!is_square()) fail(ErrorKind::ShapeError, "inverse of non-square matrix");
  const std::size_t n = rows_;
  CycMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = row_reduce(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) fail(ErrorKind::SingularMatrix, "matrix is singular");
  return aug.sub_block(0, n, n, n);
}

/// Basis of the right null space {x : m x = 0}, one vector per column of the result.
inline std::vector<std::vector<Cyclotomic>> null_space(const CycMatrix& a) {
  CycMatrix m = a;
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Cyclotomic>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Cyclotomic> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a x = b; nullopt when inconsistent. Free variables are set to zero.
inline std::optional<std::vector<Cyclotomic>> solve(const CycMatrix& a, const std::vector<Cyclotomic>& b) {
  if (b.size() != a.rows()) fail(ErrorKind::ShapeError, "right-hand side length mismatch");
  CycMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Cyclotomic> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

}  // namespace cstkit
