#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "hopfind/cyclotomic.hpp"
#include "hopfind/errors.hpp"

namespace hopfind {

class Vector {
 public:
  Vector() = default;
  explicit Vector(size_t dim) : e_(dim) {}
  explicit Vector(std::vector<CycNum> entries) : e_(std::move(entries)) {}
  Vector(std::initializer_list<CycNum> entries) : e_(entries) {}

  static Vector unit(size_t dim, size_t i) {
    Vector v(dim);
    v.e_.at(i) = CycNum(1);
    return v;
  }

  size_t dim() const { return e_.size(); }
  const CycNum& operator[](size_t i) const { return e_[i]; }
  CycNum& operator[](size_t i) { return e_[i]; }

  bool is_zero() const {
    for (const auto& c : e_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend Vector operator+(const Vector& a, const Vector& b) {
    check_dims(a, b);
    Vector r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
  }

  friend Vector operator-(const Vector& a, const Vector& b) {
    check_dims(a, b);
    Vector r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
  }

  Vector& operator+=(const Vector& o) { return *this = *this + o; }

  Vector scaled(const CycNum& c) const {
    Vector r(dim());
    for (size_t i = 0; i < dim(); ++i) r[i] = e_[i] * c;
    return r;
  }

  friend bool operator==(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) return false;
    for (size_t i = 0; i < a.dim(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

 private:
  static void check_dims(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw usage_error("vector dimension mismatch");
  }

  std::vector<CycNum> e_;
};

/// Dense row-major matrix over Q(zeta_N).
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = CycNum(1);
    return m;
  }

  static Matrix from_rows(std::vector<std::vector<CycNum>> rows) {
    size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw usage_error("ragged rows in matrix literal");
      for (size_t j = 0; j < c; ++j) m(i, j) = std::move(rows[i][j]);
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  const CycNum& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  CycNum& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }

  Vector col(size_t j) const {
    Vector v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    for (const auto& c : a_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
    return r;
  }

  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }

  Matrix scaled(const CycNum& c) const {
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw usage_error("matrix product dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const CycNum& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          const CycNum& bkj = b(k, j);
          if (!bkj.is_zero()) r(i, j) += aik * bkj;
        }
      }
    return r;
  }

  Vector apply(const Vector& x) const {
    if (cols_ != x.dim()) throw usage_error("matrix-vector dimension mismatch");
    Vector r(rows_);
    for (size_t j = 0; j < cols_; ++j) {
      if (x[j].is_zero()) continue;
      for (size_t i = 0; i < rows_; ++i) {
        const CycNum& aij = (*this)(i, j);
        if (!aij.is_zero()) r[i] += aij * x[j];
      }
    }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t k = 0; k < a.a_.size(); ++k)
      if (a.a_[k] != b.a_[k]) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw usage_error("matrix shape mismatch");
  }

  size_t rows_ = 0, cols_ = 0;
  std::vector<CycNum> a_;
};

inline Matrix transpose(const Matrix& m) {
  Matrix r(m.cols(), m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
  return r;
}

inline CycNum trace(const Matrix& m) {
  if (m.rows() != m.cols()) throw usage_error("trace of a non-square matrix");
  CycNum t;
  for (size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Kronecker product with row-major blocks: the (i,j) block of kron(A, B) is
/// A(i,j)*B, i.e. the composite index of v (x) w is i*dim(w) + j with the
/// first factor most significant. Every tensor-index convention in this
/// library (cyclic shift, vectorized intertwiner equations) matches this.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const CycNum& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) {
          const CycNum& bkl = b(k, l);
          if (!bkl.is_zero()) r(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return r;
}

/// Reduced row-echelon form with the list of pivot columns. Fraction-exact
/// Gauss-Jordan; every entry is in canonical form after each pivot step.
inline std::pair<Matrix, std::vector<size_t>> rref(Matrix m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    CycNum pinv = m(row, col).inv();
    for (size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * pinv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      CycNum f = m(r, col);
      for (size_t j = col; j < m.cols(); ++j) m(r, j) = m(r, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline size_t rank(const Matrix& m) { return rref(m).second.size(); }

/// Exact basis of { v : M v = 0 }; size = cols - rank.
inline std::vector<Vector> nullspace(const Matrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vector v(m.cols());
    v[free_col] = CycNum(1);
    for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r(pr, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw usage_error("hstack: row count mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

inline Matrix mat_from_cols(const std::vector<Vector>& cols) {
  size_t n = cols.empty() ? 0 : cols[0].dim();
  Matrix m(n, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].dim() != n) throw usage_error("mat_from_cols: ragged columns");
    for (size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw usage_error("inverse of a non-square matrix");
  size_t n = m.rows();
  auto [r, pivots] = rref(hstack(m, Matrix::identity(n)));
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) throw math_error("singular matrix");
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

/// One exact solution X of M X = B (free variables set to zero), or nullopt
/// if the system is inconsistent.
inline std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw usage_error("solve: row count mismatch");
  auto [r, pivots] = rref(hstack(m, b));
  for (size_t p : pivots)
    if (p >= m.cols()) return std::nullopt;
  Matrix x(m.cols(), b.cols());
  for (size_t pr = 0; pr < pivots.size(); ++pr)
    for (size_t j = 0; j < b.cols(); ++j) x(pivots[pr], j) = r(pr, m.cols() + j);
  return x;
}

}  // namespace hopfind
