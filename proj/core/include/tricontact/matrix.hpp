#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tricontact/scalar.hpp"

namespace tricontact {

/// Dense row-major matrix over an exact or floating-point scalar field.
/// Elimination picks pivots through scalar_ops: first nonzero entry in
/// exact mode, largest magnitude in float mode.
template <ScalarField K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: size mismatch in product");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const K& a = (*this)(i, k);
        if (scalar_ops<K>::is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + a * o(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }

  Matrix scaled(const K& f) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * f;
    return r;
  }

  std::vector<K> apply(const std::vector<K>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("Matrix: size mismatch in apply");
    std::vector<K> y(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] = y[i] + (*this)(i, j) * x[j];
    return y;
  }

  bool equal(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!scalar_ops<K>::equal(data_[i], o.data_[i])) return false;
    return true;
  }

  bool is_zero() const {
    for (const K& x : data_)
      if (!scalar_ops<K>::is_zero(x)) return false;
    return true;
  }

  /// Reduce in place to reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t best = r;
      for (std::size_t i = r + 1; i < rows_; ++i)
        if (scalar_ops<K>::better_pivot((*this)(i, c), (*this)(best, c))) best = i;
      if (scalar_ops<K>::is_zero((*this)(best, c))) continue;
      swap_rows(r, best);
      const K pivot = (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) / pivot;
      (*this)(r, c) = K(1);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        const K f = (*this)(i, c);
        if (scalar_ops<K>::is_zero(f)) continue;
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
        (*this)(i, c) = K(0);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  K determinant() const {
    require_square();
    Matrix m = *this;
    K det(1);
    bool negate = false;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t best = c;
      for (std::size_t i = c + 1; i < rows_; ++i)
        if (scalar_ops<K>::better_pivot(m(i, c), m(best, c))) best = i;
      if (scalar_ops<K>::is_zero(m(best, c))) return K(0);
      if (best != c) {
        m.swap_rows(c, best);
        negate = !negate;
      }
      det = det * m(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (scalar_ops<K>::is_zero(m(i, c))) continue;
        const K f = m(i, c) / m(c, c);
        for (std::size_t j = c; j < cols_; ++j) m(i, j) = m(i, j) - f * m(c, j);
      }
    }
    return negate ? -det : det;
  }

  std::optional<Matrix> inverse() const {
    require_square();
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = K(1);
    }
    auto pivots = aug.rref();
    if (pivots.size() != cols_ || pivots.back() != cols_ - 1) return std::nullopt;
    Matrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  /// Basis of the null space, one coordinate vector per free column.
  std::vector<std::vector<K>> kernel() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<K> v(cols_, K(0));
      v[f] = K(1);
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// One solution of A x = rhs with free coordinates set to zero,
  /// or nullopt if the system is inconsistent.
  std::optional<std::vector<K>> solve(const std::vector<K>& rhs) const {
    if (rhs.size() != rows_) throw std::invalid_argument("Matrix: size mismatch in solve");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = rhs[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<K> x(cols_, K(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
    return x;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }
  void require_square() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: square matrix required");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

}  // namespace tricontact
