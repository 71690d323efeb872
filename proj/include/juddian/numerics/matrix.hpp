#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "juddian/errors.hpp"

namespace juddian {

/// Dense real matrix, row-major.
class matrix {
public:
  matrix() = default;
  matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static matrix identity(std::size_t n) {
    matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<double> column(std::size_t j) const {
    std::vector<double> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::span<const double> data() const noexcept { return data_; }

  matrix transpose() const {
    matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  friend matrix operator*(const matrix& a, const matrix& b) {
    assert(a.cols_ == b.rows_);
    matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend matrix operator+(matrix a, const matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend matrix operator-(matrix a, const matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend matrix operator*(double s, matrix a) {
    for (double& v : a.data_) v *= s;
    return a;
  }

  std::vector<double> apply(std::span<const double> x) const {
    assert(x.size() == cols_);
    std::vector<double> y(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
      y[i] = s;
    }
    return y;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Real symmetric matrix. The only mutator writes both triangles, so the
/// stored entries are exactly symmetric.
class sym_matrix {
public:
  sym_matrix() = default;
  explicit sym_matrix(std::size_t dim) : m_(dim, dim) {}

  /// Adopts a dense matrix; throws if it is not exactly symmetric.
  static sym_matrix from_dense(const matrix& a) {
    if (!a.square()) throw domain_error("sym_matrix: matrix is not square");
    sym_matrix s(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = i; j < a.cols(); ++j) {
        if (a(i, j) != a(j, i)) throw domain_error("sym_matrix: matrix is not symmetric");
        s.set(i, j, a(i, j));
      }
    }
    return s;
  }

  std::size_t dim() const noexcept { return m_.rows(); }

  void set(std::size_t i, std::size_t j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }
  void add(std::size_t i, std::size_t j, double v) {
    m_(i, j) += v;
    if (i != j) m_(j, i) += v;
  }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  const matrix& dense() const noexcept { return m_; }
  double frobenius_norm() const { return m_.frobenius_norm(); }
  std::vector<double> apply(std::span<const double> x) const { return m_.apply(x); }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) t += m_(i, i);
    return t;
  }

private:
  matrix m_;
};

inline double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace juddian
