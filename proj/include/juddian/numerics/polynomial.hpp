#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "juddian/errors.hpp"

namespace juddian {

/// Real polynomial in one variable. coeffs()[k] multiplies x^k; trailing
/// zero coefficients are trimmed so the stored leading coefficient is
/// nonzero (the zero polynomial stores nothing and reports degree 0).
class polynomial {
public:
  polynomial() = default;
  explicit polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }
  polynomial(std::initializer_list<double> coeffs) : c_(coeffs) { trim(); }

  static polynomial constant(double c) { return polynomial(std::vector<double>{c}); }
  /// a + b x
  static polynomial linear(double a, double b) { return polynomial(std::vector<double>{a, b}); }

  int degree() const noexcept { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::span<const double> coeffs() const noexcept { return c_; }
  double coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0.0; }
  double leading() const noexcept { return c_.empty() ? 0.0 : c_.back(); }

  double max_abs_coeff() const noexcept {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Horner evaluation.
  double operator()(double x) const noexcept {
    double y = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) y = y * x + *it;
    return y;
  }

  polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return polynomial(std::move(d));
  }

  /// Rescales so the leading coefficient is +1.
  polynomial monic() const {
    if (c_.empty()) return {};
    return (1.0 / leading()) * *this;
  }

  friend polynomial operator+(const polynomial& a, const polynomial& b) {
    std::vector<double> r(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return polynomial(std::move(r));
  }
  friend polynomial operator-(const polynomial& a, const polynomial& b) { return a + (-1.0) * b; }

  friend polynomial operator*(const polynomial& a, const polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<double> r(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return polynomial(std::move(r));
  }
  friend polynomial operator*(double s, polynomial p) {
    for (double& v : p.c_) v *= s;
    p.trim();
    return p;
  }

  friend bool operator==(const polynomial&, const polynomial&) = default;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
  }

  std::vector<double> c_;
};

inline double poly_eval(const polynomial& p, double x) noexcept { return p(x); }

/// Magnitude scale used for relative residuals: max|c_k| * max(1,|x|)^deg.
inline double poly_scale(const polynomial& p, double x) {
  return p.max_abs_coeff() * std::pow(std::max(1.0, std::abs(x)), p.degree());
}

struct bracket {
  double lo;
  double hi;
};

struct root_options {
  std::size_t grid_points = 1000;
  double bisection_width = 1e-12;
  double near_double_tol = 1e-10;
};

struct root_report {
  std::vector<double> roots;        ///< simple roots, ascending
  std::vector<double> near_double;  ///< sign-preserving minima with |p| within tolerance of zero
  bool shortfall = false;           ///< fewer roots than requested (poly_real_roots_expecting only)
  bracket searched{0.0, 0.0};
};

namespace detail {

inline double polish_newton(const polynomial& p, const polynomial& dp, double x, double lo, double hi) {
  double best = x;
  double best_res = std::abs(p(x));
  for (int it = 0; it < 8 && best_res > 0.0; ++it) {
    const double d = dp(x);
    if (d == 0.0) break;
    const double next = x - p(x) / d;
    if (!(next >= lo && next <= hi)) break;
    const double res = std::abs(p(next));
    if (res >= best_res) break;
    best = next;
    best_res = res;
    if (std::abs(next - x) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) break;
    x = next;
  }
  return best;
}

// Bisection on the sign of f over [a, b] where f(a), f(b) have opposite signs.
template <class F>
double bisect_sign(F&& f, double a, double b, double fa, double width) {
  const double sa = std::signbit(fa) ? -1.0 : 1.0;
  while (b - a > width * std::max(1.0, std::abs(a))) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((std::signbit(fm) ? -1.0 : 1.0) == sa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

inline bool opposite_signs(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

}  // namespace detail

/// All real roots of p inside the open bracket, ascending. A uniform sign
/// scan isolates roots, bisection narrows them to the requested width and
/// Newton polishing finishes. Sign-preserving minima of |p| that come within
/// near_double_tol of zero (scaled) are reported separately.
inline root_report poly_real_roots(const polynomial& p, bracket range, const root_options& opt = {}) {
  if (p.degree() < 1) throw domain_error("poly_real_roots: polynomial must have degree >= 1");
  if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || !(range.lo < range.hi))
    throw domain_error("poly_real_roots: bracket must be finite with lo < hi");
  if (opt.grid_points < 2) throw domain_error("poly_real_roots: grid needs at least two points");
  if (p(range.lo) == 0.0 || p(range.hi) == 0.0)
    throw domain_error("poly_real_roots: bracket endpoint is a root; perturb the bracket");

  const polynomial dp = p.derivative();
  const std::size_t n = opt.grid_points;
  const double step = (range.hi - range.lo) / static_cast<double>(n - 1);
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = i + 1 == n ? range.hi : range.lo + static_cast<double>(i) * step;
    ys[i] = p(xs[i]);
  }

  root_report out;
  out.searched = range;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (ys[i] == 0.0) {
      out.roots.push_back(xs[i]);
      continue;
    }
    if (!detail::opposite_signs(ys[i], ys[i + 1])) continue;
    const double mid = detail::bisect_sign(p, xs[i], xs[i + 1], ys[i], opt.bisection_width);
    out.roots.push_back(detail::polish_newton(p, dp, mid, xs[i], xs[i + 1]));
  }

  // Sign-preserving local minima of |p| on the grid.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double a = std::abs(ys[i - 1]), b = std::abs(ys[i]), c = std::abs(ys[i + 1]);
    if (ys[i] == 0.0 || !(b <= a && b <= c)) continue;
    if (detail::opposite_signs(ys[i - 1], ys[i]) || detail::opposite_signs(ys[i], ys[i + 1])) continue;
    const double dl = dp(xs[i - 1]);
    const double dr = dp(xs[i + 1]);
    double xmin = xs[i];
    if (detail::opposite_signs(dl, dr)) xmin = detail::bisect_sign(dp, xs[i - 1], xs[i + 1], dl, opt.bisection_width);
    if (std::abs(p(xmin)) <= opt.near_double_tol * poly_scale(p, xmin)) out.near_double.push_back(xmin);
  }

  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

/// Root search that expects a given count: when fewer roots appear, the
/// grid is refined tenfold and the upper bound doubled once. If the count
/// is still short, shortfall is set and the caller decides how to react.
inline root_report poly_real_roots_expecting(const polynomial& p, bracket range, std::size_t expected,
                                             root_options opt = {}) {
  root_report r = poly_real_roots(p, range, opt);
  if (r.roots.size() >= expected) return r;
  opt.grid_points *= 10;
  bracket wider{range.lo, range.hi * 2.0};
  if (!(wider.lo < wider.hi)) wider.hi = range.hi + (range.hi - range.lo);
  r = poly_real_roots(p, wider, opt);
  r.shortfall = r.roots.size() < expected;
  return r;
}

/// Determinant of the symmetric tridiagonal matrix with polynomial diagonal
/// entries and real off-diagonal entries, via
/// D_k = a_k D_{k-1} - b_k^2 D_{k-2}.
inline polynomial tridiag_det_poly(std::span<const polynomial> diag, std::span<const double> offdiag) {
  if (diag.empty()) return polynomial::constant(1.0);
  if (offdiag.size() + 1 != diag.size()) throw domain_error("tridiag_det_poly: need len(offdiag) = len(diag) - 1");
  polynomial prev = polynomial::constant(1.0);
  polynomial cur = diag[0];
  for (std::size_t k = 1; k < diag.size(); ++k) {
    polynomial next = diag[k] * cur - (offdiag[k - 1] * offdiag[k - 1]) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Same recurrence when the coupling products b_k * c_k are themselves
/// polynomials in the variable.
inline polynomial tridiag_det_poly(std::span<const polynomial> diag, std::span<const polynomial> coupling_products) {
  if (diag.empty()) return polynomial::constant(1.0);
  if (coupling_products.size() + 1 != diag.size())
    throw domain_error("tridiag_det_poly: need len(couplings) = len(diag) - 1");
  polynomial prev = polynomial::constant(1.0);
  polynomial cur = diag[0];
  for (std::size_t k = 1; k < diag.size(); ++k) {
    polynomial next = diag[k] * cur - coupling_products[k - 1] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Sign-change roots of an arbitrary continuous scalar function on a
/// uniform grid, each narrowed by bisection to the given relative width.
template <class F>
std::vector<double> sign_change_roots(F&& f, bracket range, std::size_t grid_points, double width = 1e-14) {
  if (!(range.lo < range.hi) || grid_points < 2) throw domain_error("sign_change_roots: bad bracket or grid");
  std::vector<double> roots;
  const double step = (range.hi - range.lo) / static_cast<double>(grid_points - 1);
  double x0 = range.lo;
  double y0 = f(x0);
  for (std::size_t i = 1; i < grid_points; ++i) {
    const double x1 = i + 1 == grid_points ? range.hi : range.lo + static_cast<double>(i) * step;
    const double y1 = f(x1);
    if (y0 == 0.0) {
      roots.push_back(x0);
    } else if (detail::opposite_signs(y0, y1)) {
      roots.push_back(detail::bisect_sign(f, x0, x1, y0, width));
    }
    x0 = x1;
    y0 = y1;
  }
  return roots;
}

}  // namespace juddian
