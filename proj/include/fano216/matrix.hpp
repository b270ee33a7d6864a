#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fano216 {

// Dense matrix over an exact field (Rational or Cyclo). Elimination is
// fraction-free (Bareiss) with first-nonzero pivot choice, so results are
// exact and deterministic.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), e_(r * c, T::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: size mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T::zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> e_;
};

// Bareiss echelon form in place; returns (rank, det-of-leading-block sign info).
// `det_out` receives the determinant when the matrix is square, else T::zero().
template <class T>
std::size_t bareiss_rank(Matrix<T> m, T* det_out = nullptr) {
  const std::size_t R = m.rows(), C = m.cols();
  T prev = T::one();
  bool negate = false;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = rank;
    while (piv < R && m(piv, col) == T::zero()) ++piv;
    if (piv == R) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(rank, j));
      negate = !negate;
    }
    for (std::size_t i = rank + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j)
        m(i, j) = (m(i, j) * m(rank, col) - m(i, col) * m(rank, j)) / prev;
      m(i, col) = T::zero();
    }
    prev = m(rank, col);
    ++rank;
  }
  if (det_out) {
    if (R != C || rank < R) {
      *det_out = T::zero();
    } else {
      // Bareiss: last pivot equals the determinant up to the swap sign
      *det_out = negate ? T::zero() - prev : prev;
    }
  }
  return rank;
}

template <class T>
std::size_t matrix_rank(const Matrix<T>& m) {
  return bareiss_rank(m);
}

template <class T>
T matrix_det(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_det: not square");
  T d = T::zero();
  bareiss_rank(m, &d);
  return d;
}

// Solves A x = b for square nonsingular A. Throws std::domain_error if singular.
template <class T>
std::vector<T> matrix_solve(const Matrix<T>& a, const std::vector<T>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("matrix_solve: shape");
  Matrix<T> m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = b[i];
  }
  T prev = T::one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == T::zero()) ++piv;
    if (piv == n) throw std::domain_error("matrix_solve: singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j <= n; ++j) std::swap(m(piv, j), m(col, j));
    for (std::size_t i = col + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j <= n; ++j)
        m(i, j) = (m(i, j) * m(col, col) - m(i, col) * m(col, j)) / prev;
      m(i, col) = T::zero();
    }
    prev = m(col, col);
  }
  std::vector<T> x(n, T::zero());
  for (std::size_t ii = n; ii-- > 0;) {
    T s = m(ii, n);
    for (std::size_t j = ii + 1; j < n; ++j) s = s - m(ii, j) * x[j];
    x[ii] = s / m(ii, ii);
  }
  return x;
}

// Kernel basis via reduced row echelon form (plain field elimination);
// intentionally a different elimination path than bareiss_rank.
template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<long> pivot_of_col(C, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t piv = row;
    while (piv < R && m(piv, col) == T::zero()) ++piv;
    if (piv == R) continue;
    if (piv != row)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(row, j));
    T inv = T::one() / m(row, col);
    for (std::size_t j = 0; j < C; ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row || m(i, col) == T::zero()) continue;
      T f = m(i, col);
      for (std::size_t j = 0; j < C; ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    pivot_of_col[col] = static_cast<long>(row);
    ++row;
  }
  std::vector<std::vector<T>> basis;
  for (std::size_t free_col = 0; free_col < C; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    std::vector<T> v(C, T::zero());
    v[free_col] = T::one();
    for (std::size_t col = 0; col < C; ++col)
      if (pivot_of_col[col] >= 0)
        v[col] = T::zero() - m(static_cast<std::size_t>(pivot_of_col[col]), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fano216
