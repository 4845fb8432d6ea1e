#pragma once

/**
 * @file linalg.hpp
 * @brief Small dense matrices over an exact field with Gaussian elimination.
 *
 * Pivoting takes the first nonzero entry of a column; exact arithmetic makes
 * pivot magnitude irrelevant.
 */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mz/error.hpp"
#include "mz/scalars.hpp"

namespace mz {

template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool isZero() const {
    for (const auto& x : data_) {
      if (!x.isZero()) return false;
    }
    return true;
  }

  F trace() const {
    F t(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (x.isZero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
      }
    }
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator*(Matrix a, const F& s) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Row-reduced echelon form in place; returns pivot columns.
template <Field F>
std::vector<std::size_t> rowReduce(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).isZero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    }
    F inv = F(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).isZero()) continue;
      F factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <Field F>
std::size_t rank(Matrix<F> m) {
  return rowReduce(m).size();
}

/// Solution of the square system A x = b, or nullopt when A is singular.
template <Field F>
std::optional<std::vector<F>> solveUnique(const Matrix<F>& a, const std::vector<F>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DomainError("solveUnique: dimension mismatch");
  Matrix<F> aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = rowReduce(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  std::vector<F> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
  return x;
}

/// A nonzero vector y with y^T m = 0, when the rows of m are dependent.
template <Field F>
std::optional<std::vector<F>> leftKernelVector(const Matrix<F>& m) {
  Matrix<F> t = m.transposed();
  auto pivots = rowReduce(t);
  if (pivots.size() == t.cols()) return std::nullopt;
  std::size_t free = 0;
  for (std::size_t k = 0; k < pivots.size() && pivots[k] == free; ++k) ++free;
  std::vector<F> y(t.cols(), F(0));
  y[free] = F(1);
  for (std::size_t k = 0; k < pivots.size(); ++k) y[pivots[k]] = -t(k, free);
  return y;
}

template <Field F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).isZero()) ++piv;
    if (piv == n) return F(0);
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    F inv = F(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).isZero()) continue;
      F factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

}  // namespace mz
