#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "juddian/errors.hpp"
#include "juddian/numerics/matrix.hpp"

namespace juddian {

/// Highest retained occupation number; the basis is |0>..|max>.
struct fock_cutoff {
  std::size_t max = 100;

  std::size_t basis_size() const noexcept { return max + 1; }
};

struct ladder_ops {
  matrix create;
  matrix annihilate;
  matrix number;
};

/// Truncated b^dagger, b and b^dagger b on |0>..|M>.
inline ladder_ops ladder_matrices(fock_cutoff cutoff) {
  const std::size_t n = cutoff.basis_size();
  ladder_ops ops{matrix(n, n), matrix(n, n), matrix(n, n)};
  for (std::size_t k = 0; k + 1 < n; ++k) ops.create(k + 1, k) = std::sqrt(static_cast<double>(k + 1));
  ops.annihilate = ops.create.transpose();
  for (std::size_t k = 0; k < n; ++k) ops.number(k, k) = static_cast<double>(k);
  return ops;
}

/// Real displacement amplitude z of D(z) = exp(z (b^dagger - b)).
struct displacement_params {
  double z = 0.0;
};

/// exp(z (b^dagger - b)) on the truncated basis by scaling and squaring of
/// the truncated generator. Column n is the displaced number state D(z)|n>.
/// Requires z^2 <= M/4 so the retained columns are not corrupted by the cut.
inline matrix displacement_matrix(displacement_params params, fock_cutoff cutoff) {
  const double z = params.z;
  if (!std::isfinite(z)) throw domain_error("displacement_matrix: non-finite amplitude");
  if (z * z > static_cast<double>(cutoff.max) / 4.0)
    throw cutoff_error("displacement_matrix: |z|^2 = " + std::to_string(z * z) + " exceeds M/4 = " +
                       std::to_string(static_cast<double>(cutoff.max) / 4.0) + "; raise the cutoff");
  const std::size_t n = cutoff.basis_size();
  if (z == 0.0) return matrix::identity(n);

  matrix gen(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double s = z * std::sqrt(static_cast<double>(k + 1));
    gen(k + 1, k) = s;
    gen(k, k + 1) = -s;
  }
  int squarings = 0;
  double norm = gen.frobenius_norm();
  while (norm >= 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  gen = std::ldexp(1.0, -squarings) * gen;

  matrix result = matrix::identity(n);
  matrix term = matrix::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = (1.0 / k) * (term * gen);
    result = result + term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

/// Squeezing parameters on the physical branch for a real coupling lambda.
/// rho, theta and beta are the polar form of sigma = -exp(-i theta)
/// tanh(rho/2); they are informational only.
struct squeeze_parameters {
  double lambda = 0.0;
  double sigma = 0.0;
  double omega = 1.0;  ///< sqrt(1 - 4 lambda^2)
  double rho = 0.0;
  double theta = std::numbers::pi;
  double beta = 0.0;
};

inline squeeze_parameters squeeze_params(double lambda) {
  if (!(std::abs(lambda) < 0.5))
    throw domain_error("squeeze_params: |lambda| must be < 1/2 (Omega would be imaginary)");
  squeeze_parameters p;
  p.lambda = lambda;
  p.omega = std::sqrt(1.0 - 4.0 * lambda * lambda);
  // (1 - Omega)/(2 lambda) rewritten to avoid cancellation near lambda = 0
  p.sigma = lambda == 0.0 ? 0.0 : 2.0 * lambda / (1.0 + p.omega);
  p.theta = p.sigma >= 0.0 ? std::numbers::pi : 0.0;
  p.rho = 2.0 * std::atanh(std::abs(p.sigma));
  return p;
}

/// b^dagger b + lambda (b^dagger + b) + 1/2 + lambda^2
inline sym_matrix displaced_osc_hamiltonian(double lambda, fock_cutoff cutoff) {
  if (!std::isfinite(lambda)) throw domain_error("displaced_osc_hamiltonian: non-finite lambda");
  const std::size_t n = cutoff.basis_size();
  sym_matrix h(n);
  for (std::size_t k = 0; k < n; ++k) {
    h.set(k, k, static_cast<double>(k) + 0.5 + lambda * lambda);
    if (k + 1 < n) h.set(k, k + 1, lambda * std::sqrt(static_cast<double>(k + 1)));
  }
  return h;
}

/// b^dagger b + 1/2 + lambda (b^dagger^2 + b^2), |lambda| < 1/2
inline sym_matrix squeezed_osc_hamiltonian(double lambda, fock_cutoff cutoff) {
  if (!(std::abs(lambda) < 0.5))
    throw domain_error("squeezed_osc_hamiltonian: |lambda| must be < 1/2");
  const std::size_t n = cutoff.basis_size();
  sym_matrix h(n);
  for (std::size_t k = 0; k < n; ++k) {
    h.set(k, k, static_cast<double>(k) + 0.5);
    if (k + 2 < n) h.set(k, k + 2, lambda * std::sqrt(static_cast<double>((k + 1) * (k + 2))));
  }
  return h;
}

}  // namespace juddian
