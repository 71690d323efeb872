#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "juddian/errors.hpp"
#include "juddian/numerics/matrix.hpp"

namespace juddian {

/// Eigenpairs of a real symmetric matrix. values ascend; column k of
/// vectors pairs with values[k] and has its largest-magnitude entry positive.
struct eig_result {
  std::vector<double> values;
  matrix vectors;

  std::vector<double> vector(std::size_t k) const { return vectors.column(k); }
};

namespace detail {

// Householder reduction of the symmetric matrix held in v to tridiagonal
// form. On exit d holds the diagonal, e[1..n-1] the subdiagonal and v the
// accumulated orthogonal transformation.
inline void householder_tridiagonalize(matrix& v, std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(v.rows());
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (int j = 0; j < n; ++j) d[j] = v(n - 1, j);

  for (int i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (int k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (int j = 0; j < i; ++j) {
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
        v(j, i) = 0.0;
      }
    } else {
      for (int k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (int j = 0; j < i; ++j) e[j] = 0.0;

      for (int j = 0; j < i; ++j) {
        f = d[j];
        v(j, i) = f;
        g = e[j] + v(j, j) * f;
        for (int k = j + 1; k <= i - 1; ++k) {
          g += v(k, j) * d[k];
          e[k] += v(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (int j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (int j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (int j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (int k = j; k <= i - 1; ++k) v(k, j) -= (f * e[k] + g * d[k]);
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  for (int i = 0; i < n - 1; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (int k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
      for (int j = 0; j <= i; ++j) {
        double g = 0.0;
        for (int k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (int k = 0; k <= i; ++k) v(k, j) -= g * d[k];
      }
    }
    for (int k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
  }
  for (int j = 0; j < n; ++j) {
    d[j] = v(n - 1, j);
    v(n - 1, j) = 0.0;
  }
  v(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicitly shifted QL on the tridiagonal (d, e) with e[i] coupling rows
// i-1 and i. Rotations are accumulated into v when it is non-null.
inline void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, matrix* v) {
  const int n = static_cast<int>(d.size());
  constexpr int max_sweeps = 60;
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int sweeps = 0;
      do {
        if (++sweeps > max_sweeps) {
          throw convergence_error(static_cast<std::size_t>(l),
                                  "sym_eig: no convergence for eigenvalue " + std::to_string(l) +
                                      " after " + std::to_string(max_sweeps) + " QL sweeps");
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          if (v != nullptr) {
            for (std::size_t k = 0; k < v->rows(); ++k) {
              h = (*v)(k, i + 1);
              (*v)(k, i + 1) = s * (*v)(k, i) + c * h;
              (*v)(k, i) = c * (*v)(k, i) - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

inline eig_result sorted_result(const std::vector<double>& d, const matrix& v) {
  const std::size_t n = d.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  eig_result out;
  out.values.resize(n);
  out.vectors = matrix(v.rows(), n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.values[k] = d[src];
    std::size_t arg = 0;
    double big = -1.0;
    for (std::size_t i = 0; i < v.rows(); ++i) {
      if (std::abs(v(i, src)) > big) {
        big = std::abs(v(i, src));
        arg = i;
      }
    }
    const double sign = v(arg, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < v.rows(); ++i) out.vectors(i, k) = sign * v(i, src);
  }
  return out;
}

inline void require_finite(std::span<const double> xs, const char* who) {
  for (double x : xs)
    if (!std::isfinite(x)) throw domain_error(std::string(who) + ": non-finite matrix entry");
}

}  // namespace detail

/// Full eigendecomposition of a symmetric matrix: Householder reduction to
/// tridiagonal form followed by implicitly shifted QL.
inline eig_result sym_eig(const sym_matrix& a) {
  if (a.dim() == 0) throw domain_error("sym_eig: empty matrix");
  detail::require_finite(a.dense().data(), "sym_eig");
  matrix v = a.dense();
  std::vector<double> d, e;
  detail::householder_tridiagonalize(v, d, e);
  detail::tridiagonal_ql(d, e, &v);
  return detail::sorted_result(d, v);
}

/// Eigenpairs of the symmetric tridiagonal matrix with the given diagonal
/// and off-diagonal (offdiag[i] couples i and i+1).
inline eig_result tridiag_eig(std::span<const double> diag, std::span<const double> offdiag) {
  const std::size_t n = diag.size();
  if (n == 0) throw domain_error("tridiag_eig: empty matrix");
  if (offdiag.size() + 1 != n) throw domain_error("tridiag_eig: offdiag must have dim-1 entries");
  detail::require_finite(diag, "tridiag_eig");
  detail::require_finite(offdiag, "tridiag_eig");
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) e[i] = offdiag[i - 1];
  matrix v = matrix::identity(n);
  detail::tridiagonal_ql(d, e, &v);
  return detail::sorted_result(d, v);
}

/// Ascending eigenvalues only of a symmetric tridiagonal matrix.
inline std::vector<double> tridiag_eigenvalues(std::span<const double> diag, std::span<const double> offdiag) {
  const std::size_t n = diag.size();
  if (n == 0) throw domain_error("tridiag_eigenvalues: empty matrix");
  if (offdiag.size() + 1 != n) throw domain_error("tridiag_eigenvalues: offdiag must have dim-1 entries");
  detail::require_finite(diag, "tridiag_eigenvalues");
  detail::require_finite(offdiag, "tridiag_eigenvalues");
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) e[i] = offdiag[i - 1];
  detail::tridiagonal_ql(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace juddian
