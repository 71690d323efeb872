#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "juddian/errors.hpp"
#include "juddian/numerics/matrix.hpp"

namespace juddian {

/// Determinant by LU factorization with partial pivoting.
inline double determinant(matrix a) {
  if (!a.square()) throw domain_error("determinant: matrix is not square");
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::abs(a(i, c)) > std::abs(a(piv, c))) piv = i;
    if (a(piv, c) == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      const double f = a(i, c) / a(c, c);
      if (f == 0.0) continue;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// |det A| divided by the product of the row 2-norms. Lies in [0, 1]
/// (Hadamard) and is zero exactly when A is singular.
inline double hadamard_ratio(const matrix& a) {
  double d = std::abs(determinant(a));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double r = norm2(a.row(i));
    if (r == 0.0) return 0.0;
    d /= r;
  }
  return d;
}

struct null_vector_options {
  double pivot_tol = 1e-10;  ///< relative to the Frobenius norm
};

/// Unit vector spanning (one direction of) the numerical null space of a
/// square matrix. Gaussian elimination with partial pivoting; a column whose
/// best pivot falls below pivot_tol * ||A||_F is free and is set to 1 before
/// back-substitution. The sign is fixed so the first nonzero entry is
/// positive.
inline std::vector<double> null_vector(const matrix& a_in, const null_vector_options& opt = {}) {
  if (!a_in.square()) throw domain_error("null_vector: matrix is not square");
  const std::size_t n = a_in.rows();
  if (n == 0) throw domain_error("null_vector: empty matrix");
  matrix a = a_in;
  const double tol = opt.pivot_tol * a.frobenius_norm();

  std::vector<std::size_t> pivot_col;  // pivot column of each echelon row
  std::vector<std::size_t> free_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = r;
    double best = -1.0;
    for (std::size_t i = r; i < n; ++i) {
      if (std::abs(a(i, c)) > best) {
        best = std::abs(a(i, c));
        piv = i;
      }
    }
    if (r >= n || best <= tol) {
      free_cols.push_back(c);
      continue;
    }
    if (piv != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(piv, j));
    for (std::size_t i = r + 1; i < n; ++i) {
      const double f = a(i, c) / a(r, c);
      if (f == 0.0) continue;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(r, j);
      a(i, c) = 0.0;
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (free_cols.empty()) throw full_rank_error("null_vector: matrix is numerically full rank");

  std::vector<double> x(n, 0.0);
  x[free_cols.back()] = 1.0;
  for (std::size_t k = pivot_col.size(); k-- > 0;) {
    const std::size_t c = pivot_col[k];
    double s = 0.0;
    for (std::size_t j = c + 1; j < n; ++j) s += a(k, j) * x[j];
    x[c] = -s / a(k, c);
  }

  const double nrm = norm2(x);
  for (double& v : x) v /= nrm;
  for (double v : x) {
    if (std::abs(v) > 1e-14) {
      if (v < 0.0)
        for (double& w : x) w = -w;
      break;
    }
  }
  return x;
}

}  // namespace juddian
