#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "juddian/boson.hpp"
#include "juddian/errors.hpp"
#include "juddian/numerics/linear.hpp"
#include "juddian/numerics/matrix.hpp"
#include "juddian/numerics/polynomial.hpp"
#include "juddian/rabi.hpp"

namespace juddian {

// Exact isolated (Juddian) eigenstates of the rescaled Rabi Hamiltonian.
//
// In the representation where sigma_x is diagonal the state is a pair
// (psi1, psi2). Writing both components in the number states |n; lambda>
// of the displaced boson a = b - lambda, the finite Ansatz
//   psi1 = sum_{n<N}  p_n |n; lambda>,   psi2 = sum_{n<=N} q_n |n; lambda>
// closes on itself only for E = N - lambda^2, and the remaining 2N+1
// coefficient equations are homogeneous in (p, q). Their determinant,
// a degree-N polynomial in x = lambda^2, locates the Juddian couplings.

/// Which displaced boson carries the Ansatz: a = b - lambda (plus) or
/// a = b + lambda with the two spinor components interchanged (minus).
enum class branch : int { plus = 1, minus = -1 };

inline branch other(branch b) noexcept { return b == branch::plus ? branch::minus : branch::plus; }

/// E = N - lambda^2
inline double baseline_energy(int n, double lambda) noexcept { return static_cast<double>(n) - lambda * lambda; }

/// The (2N+1)x(2N+1) homogeneous system on (p_0..p_{N-1}, q_0..q_N) at
/// x = lambda^2 with E = N - x substituted. Rows 0..N compare coefficients
/// of |n; lambda> in the first equation, rows N+1..2N those of the second
/// (its |N; lambda> row is what fixes E and is therefore absent).
inline matrix build_full_system(int n_order, double omega_tilde, double x, branch b = branch::plus) {
  if (n_order < 1) throw domain_error("build_full_system: N must be >= 1");
  if (!(x >= 0.0)) throw domain_error("build_full_system: x = lambda^2 must be >= 0");
  const auto n_sz = static_cast<std::size_t>(n_order);
  const double lam = static_cast<int>(b) * std::sqrt(x);
  const double energy = static_cast<double>(n_order) - x;
  auto p = [](std::size_t n) { return n; };
  auto q = [n_sz](std::size_t n) { return n_sz + n; };

  matrix a(2 * n_sz + 1, 2 * n_sz + 1);
  for (std::size_t n = 0; n <= n_sz; ++n) {
    const std::size_t row = n;
    a(row, q(n)) = omega_tilde;
    if (n < n_sz) a(row, p(n)) = static_cast<double>(n) + 3.0 * x - energy;
    if (n >= 1) a(row, p(n - 1)) = 2.0 * lam * std::sqrt(static_cast<double>(n));
    if (n + 1 < n_sz) a(row, p(n + 1)) = 2.0 * lam * std::sqrt(static_cast<double>(n + 1));
  }
  for (std::size_t n = 0; n < n_sz; ++n) {
    const std::size_t row = n_sz + 1 + n;
    a(row, p(n)) = omega_tilde;
    a(row, q(n)) = static_cast<double>(n) - x - energy;
  }
  return a;
}

/// Determinant of the full system; its sign changes in x are the
/// compatibility roots.
inline double full_system_determinant(int n_order, double omega_tilde, double x, branch b = branch::plus) {
  return determinant(build_full_system(n_order, omega_tilde, x, b));
}

/// Tridiagonal system on p alone after eliminating q through
/// q_n = omega_tilde p_n / (N - n) (n < N) and
/// q_N = -2 lambda sqrt(N) p_{N-1} / omega_tilde:
///   diagonal   n - N + 4x + omega_tilde^2 / (N - n)
///   coupling   2 lambda sqrt(n + 1) between p_n and p_{n+1}.
/// Entries are returned as polynomials in x; couplings as the products
/// (2 lambda sqrt(n+1))^2 = 4 (n+1) x.
struct reduced_system {
  std::vector<polynomial> diag;
  std::vector<polynomial> coupling_products;
};

inline reduced_system build_reduced_system(int n_order, double omega_tilde) {
  if (n_order < 1) throw domain_error("build_reduced_system: N must be >= 1");
  reduced_system r;
  const double big_n = n_order;
  for (int n = 0; n < n_order; ++n) {
    r.diag.push_back(polynomial::linear(n - big_n + omega_tilde * omega_tilde / (big_n - n), 4.0));
    if (n + 1 < n_order) r.coupling_products.push_back(polynomial::linear(0.0, 4.0 * (n + 1)));
  }
  return r;
}

/// Dense form of the reduced system at a given x (for checks).
inline matrix reduced_system_matrix(int n_order, double omega_tilde, double x) {
  const reduced_system r = build_reduced_system(n_order, omega_tilde);
  const auto n = static_cast<std::size_t>(n_order);
  matrix a(n, n);
  const double lam = std::sqrt(x);
  for (std::size_t k = 0; k < n; ++k) {
    a(k, k) = r.diag[k](x);
    if (k + 1 < n) {
      a(k, k + 1) = 2.0 * lam * std::sqrt(static_cast<double>(k + 1));
      a(k + 1, k) = a(k, k + 1);
    }
  }
  return a;
}

/// Degree-N compatibility polynomial in x = lambda^2: N! times the reduced
/// determinant, which clears the omega_tilde^2/(N-n) denominators and gives
/// a positive leading coefficient 4^N N!. For N = 1, 2 this is
///   4x + omega_tilde^2 - 1
///   32x^2 + (12 omega_tilde^2 - 32) x + omega_tilde^4 - 5 omega_tilde^2 + 4.
inline polynomial compatibility_polynomial(int n_order, double omega_tilde) {
  const reduced_system r = build_reduced_system(n_order, omega_tilde);
  double factorial = 1.0;
  for (int k = 2; k <= n_order; ++k) factorial *= k;
  return factorial * tridiag_det_poly(r.diag, r.coupling_products);
}

struct juddian_point {
  int N = 0;
  int root_index = 0;  ///< 1-based, ascending in lambda^2
  double omega = 1.0;
  double omega_tilde = 0.5;
  double x = 0.0;  ///< lambda^2, a polished compatibility root
  double lambda = 0.0;
  double g = 0.0;
  double E = 0.0;  ///< scaled units
  double det_residual = 0.0;
  double degeneracy_gap = std::numeric_limits<double>::quiet_NaN();
  branch displacement = branch::plus;

  model_params params() const noexcept { return {omega, 2.0 * omega * omega_tilde, g}; }
};

struct juddian_point_set {
  std::vector<juddian_point> points;
  std::size_t expected = 0;
  bool shortfall = false;
  std::vector<double> near_double;  ///< flagged near-double roots in x
};

inline bool is_resonant(double omega_tilde) noexcept { return std::abs(omega_tilde - 0.5) <= 1e-12; }

/// All Juddian points of order N: positive roots x of the compatibility
/// polynomial mapped to lambda = sqrt(x), g = lambda omega / 2, E = N - x.
/// At resonance N roots are required; a shortfall throws. Elsewhere it is
/// only flagged, since roots may leave the positive half-line.
inline juddian_point_set juddian_points(int n_order, const model_params& params, branch b = branch::plus) {
  if (n_order < 1) throw domain_error("juddian_points: N must be >= 1");
  params.validate();
  const double wt = params.omega_tilde();
  if (!(wt > 0.0))
    throw domain_error("juddian_points: omega_tilde must be > 0 (omega_tilde = 0 is exactly solvable for every lambda)");

  const polynomial poly = compatibility_polynomial(n_order, wt);
  const auto expected = static_cast<std::size_t>(n_order);
  const root_report roots = poly_real_roots_expecting(poly, {1e-12, static_cast<double>(n_order)}, expected);

  juddian_point_set out;
  out.expected = expected;
  out.near_double = roots.near_double;
  for (double x : roots.roots) {
    if (!(x > 0.0)) continue;
    juddian_point pt;
    pt.N = n_order;
    pt.root_index = static_cast<int>(out.points.size()) + 1;
    pt.omega = params.omega;
    pt.omega_tilde = wt;
    pt.x = x;
    pt.lambda = std::sqrt(x);
    pt.g = pt.lambda * params.omega / 2.0;
    pt.E = baseline_energy(n_order, pt.lambda);
    pt.det_residual = hadamard_ratio(build_full_system(n_order, wt, x, b));
    pt.displacement = b;
    out.points.push_back(pt);
  }
  out.shortfall = out.points.size() < expected;
  if (out.shortfall && is_resonant(wt)) {
    throw root_shortfall_error(expected, out.points.size(),
                               "juddian_points: found " + std::to_string(out.points.size()) + " of " +
                                   std::to_string(expected) + " compatibility roots for N = " +
                                   std::to_string(n_order) + " at resonance");
  }
  return out;
}

/// Same point, Ansatz on the other displaced boson.
inline juddian_point alternate_branch(juddian_point p) noexcept {
  p.displacement = other(p.displacement);
  return p;
}

struct juddian_state {
  std::vector<double> p;  ///< N coefficients of the N-term component
  std::vector<double> q;  ///< N+1 coefficients of the (N+1)-term component
  branch displacement = branch::plus;
  std::vector<double> fock_vector;  ///< sigma_z assembly basis, index 2n + (spin down)
};

/// Null vector of the full system split into (p, q) and mapped to the Fock
/// basis: |n; +-lambda> are columns of D(+-lambda), the sigma_x components
/// (psi1, psi2) are rotated to spin up = (psi1 + psi2)/sqrt2 and
/// spin down = (psi1 - psi2)/sqrt2.
inline juddian_state reconstruct_state(const juddian_point& pt, fock_cutoff cutoff) {
  const matrix sys = build_full_system(pt.N, pt.omega_tilde, pt.x, pt.displacement);
  const std::vector<double> v = null_vector(sys);
  const auto n = static_cast<std::size_t>(pt.N);

  juddian_state st;
  st.displacement = pt.displacement;
  st.p.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
  st.q.assign(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
  if (std::abs(st.q.back()) < 1e-12) throw error("reconstruct_state: top coefficient q_N vanished");

  const double z = static_cast<int>(pt.displacement) * pt.lambda;
  const matrix d = displacement_matrix({z}, cutoff);
  const std::size_t nb = cutoff.basis_size();
  if (n + 1 > nb) throw cutoff_error("reconstruct_state: cutoff below Ansatz order");

  // Components carrying p and q; interchanged on the minus branch.
  std::vector<double> with_p(nb, 0.0), with_q(nb, 0.0);
  for (std::size_t row = 0; row < nb; ++row) {
    double sp = 0.0, sq = 0.0;
    for (std::size_t k = 0; k < n; ++k) sp += st.p[k] * d(row, k);
    for (std::size_t k = 0; k <= n; ++k) sq += st.q[k] * d(row, k);
    with_p[row] = sp;
    with_q[row] = sq;
  }
  const std::vector<double>& psi1 = pt.displacement == branch::plus ? with_p : with_q;
  const std::vector<double>& psi2 = pt.displacement == branch::plus ? with_q : with_p;

  st.fock_vector.assign(2 * nb, 0.0);
  for (std::size_t row = 0; row < nb; ++row) {
    st.fock_vector[basis_index(row, spin::up)] = (psi1[row] + psi2[row]) / std::sqrt(2.0);
    st.fock_vector[basis_index(row, spin::down)] = (psi1[row] - psi2[row]) / std::sqrt(2.0);
  }
  const double nrm = norm2(st.fock_vector);
  for (double& c : st.fock_vector) c /= nrm;
  return st;
}

/// ||(H~ - E) psi||_2 on the assembly basis.
inline double eigen_residual(const juddian_point& pt, const juddian_state& st, fock_cutoff cutoff) {
  const sym_matrix h = build_rabi(pt.params(), cutoff, true);
  std::vector<double> r = h.apply(st.fock_vector);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= pt.E * st.fock_vector[i];
  return norm2(r);
}

struct verification {
  juddian_point point;  ///< with degeneracy_gap filled
  double eigen_residual = 0.0;
  std::size_t plus_level = 0;
  std::size_t minus_level = 0;
  double E_plus = 0.0;
  double E_minus = 0.0;
};

/// Checks a point against direct diagonalization: the parity blocks at
/// point.g must each hold an eigenvalue at E, and the reconstructed state
/// must be an eigenvector of the truncated Hamiltonian. Throws only when
/// neither block has an eigenvalue within 1e-3 of E; a one-sided miss is
/// reported through degeneracy_gap.
inline verification verify_point(const juddian_point& pt, fock_cutoff cutoff) {
  constexpr double search_window = 1e-3;
  const auto [bp, bm] = parity_blocks(pt.params(), cutoff, true);
  const std::vector<double> ep = bp.eigenvalues();
  const std::vector<double> em = bm.eigenvalues();
  auto nearest = [&](const std::vector<double>& ev) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < ev.size(); ++k)
      if (std::abs(ev[k] - pt.E) < std::abs(ev[best] - pt.E)) best = k;
    return best;
  };

  verification out;
  out.point = pt;
  out.plus_level = nearest(ep);
  out.minus_level = nearest(em);
  out.E_plus = ep[out.plus_level];
  out.E_minus = em[out.minus_level];
  if (std::abs(out.E_plus - pt.E) > search_window && std::abs(out.E_minus - pt.E) > search_window) {
    throw cutoff_error("verify_point: no eigenvalue within 1e-3 of E = " + std::to_string(pt.E) +
                       " in either parity block at cutoff M = " + std::to_string(cutoff.max) +
                       " (cutoff too small or point off the compatibility locus)");
  }
  out.point.degeneracy_gap = std::abs(out.E_plus - out.E_minus);
  out.eigen_residual = eigen_residual(pt, reconstruct_state(pt, cutoff), cutoff);
  return out;
}

}  // namespace juddian
