#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qes/field.hpp"

namespace qes {

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::vector<F> column(std::size_t c) const {
    std::vector<F> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_column(std::size_t c, const std::vector<F>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
  friend Matrix operator*(const F& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend std::vector<F> operator*(const Matrix& a, const std::vector<F>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("Matrix: shape mismatch in product");
    std::vector<F> out(a.rows_, F(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Reduces in place to reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t pivot = row;
      while (pivot < rows_ && (*this)(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) continue;
      swap_rows(pivot, row);
      const F inv = (*this)(row, col).inverse();
      for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || (*this)(r, col).is_zero()) continue;
        const F factor = (*this)(r, col);
        for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) -= factor * (*this)(row, c);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  [[nodiscard]] std::size_t rank() const {
    Matrix copy = *this;
    return copy.rref().size();
  }

  /// Basis of the right null space {v : A v = 0}.
  [[nodiscard]] std::vector<std::vector<F>> nullspace() const {
    Matrix reduced = *this;
    const auto pivots = reduced.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<F> v(cols_, F(0));
      v[free] = F(1);
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Some solution of A x = b, or nullopt if the system is inconsistent.
  [[nodiscard]] std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("Matrix::solve: rhs size mismatch");
    Matrix augmented(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) augmented(r, c) = (*this)(r, c);
      augmented(r, cols_) = b[r];
    }
    const auto pivots = augmented.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<F> x(cols_, F(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = augmented(i, cols_);
    return x;
  }

  /// Determinant by Gaussian elimination.
  [[nodiscard]] F determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::determinant: not square");
    Matrix m = *this;
    F det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t pivot = col;
      while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) return F(0);
      if (pivot != col) {
        m.swap_rows(pivot, col);
        det = -det;
      }
      det *= m(col, col);
      const F inv = m(col, col).inverse();
      for (std::size_t r = col + 1; r < rows_; ++r) {
        if (m(r, col).is_zero()) continue;
        const F factor = m(r, col) * inv;
        for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(col, c);
      }
    }
    return det;
  }

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
      os << '[';
      for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << to_string((*this)(r, c));
      os << "]\n";
    }
    return os.str();
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <ExactField F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b - b * a;
}

}  // namespace qes
