#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "juddian/boson.hpp"
#include "juddian/errors.hpp"
#include "juddian/numerics/matrix.hpp"
#include "juddian/numerics/sym_eig.hpp"

namespace juddian {

/// Physical couplings of the Rabi Hamiltonian
///   H = (omega0/2) sigma_z + omega b^dagger b + g (b^dagger + b)(sigma_+ + sigma_-)
/// and the rescaled pair used by every solver, H = omega * H~ with
///   H~ = omega_tilde sigma_z + b^dagger b + lambda (b^dagger + b) sigma_x.
struct model_params {
  double omega = 1.0;
  double omega0 = 1.0;
  double g = 0.0;

  double omega_tilde() const noexcept { return omega0 / (2.0 * omega); }
  double lambda() const noexcept { return 2.0 * g / omega; }

  model_params with_g(double coupling) const noexcept {
    model_params p = *this;
    p.g = coupling;
    return p;
  }

  void validate() const {
    if (!(omega > 0.0) || !std::isfinite(omega)) throw domain_error("model_params: omega must be positive and finite");
    if (!std::isfinite(omega0) || !std::isfinite(g)) throw domain_error("model_params: non-finite parameter");
  }
};

/// sigma_z eigenvalue of the spin index used in the assembly basis.
enum class spin : int { up = 1, down = -1 };

/// Position of (n, s) in the assembly basis: (n, spin) lexicographic with
/// spin up first.
constexpr std::size_t basis_index(std::size_t n, spin s) noexcept { return 2 * n + (s == spin::up ? 0 : 1); }

/// Eigenvalue of Pi = -sigma_z cos(pi n) on |n, s>.
constexpr int parity_of(std::size_t n, spin s) noexcept {
  const int sz = static_cast<int>(s);
  return (n % 2 == 0) ? -sz : sz;
}

/// Rabi matrix on the 2(M+1)-dimensional basis; the scaled form is H~ and
/// the unscaled one omega * H~.
inline sym_matrix build_rabi(const model_params& params, fock_cutoff cutoff, bool scaled = true) {
  params.validate();
  const double wt = params.omega_tilde();
  const double lam = params.lambda();
  const double unit = scaled ? 1.0 : params.omega;
  const std::size_t nb = cutoff.basis_size();
  sym_matrix h(2 * nb);
  for (std::size_t n = 0; n < nb; ++n) {
    h.set(basis_index(n, spin::up), basis_index(n, spin::up), unit * (static_cast<double>(n) + wt));
    h.set(basis_index(n, spin::down), basis_index(n, spin::down), unit * (static_cast<double>(n) - wt));
    if (n + 1 < nb) {
      const double c = unit * lam * std::sqrt(static_cast<double>(n + 1));
      h.set(basis_index(n, spin::up), basis_index(n + 1, spin::down), c);
      h.set(basis_index(n, spin::down), basis_index(n + 1, spin::up), c);
    }
  }
  return h;
}

/// Diagonal matrix of Pi on the assembly basis.
inline matrix parity_operator(fock_cutoff cutoff) {
  const std::size_t nb = cutoff.basis_size();
  matrix p(2 * nb, 2 * nb);
  for (std::size_t n = 0; n < nb; ++n) {
    p(basis_index(n, spin::up), basis_index(n, spin::up)) = parity_of(n, spin::up);
    p(basis_index(n, spin::down), basis_index(n, spin::down)) = parity_of(n, spin::down);
  }
  return p;
}

/// One invariant subspace of Pi. The coupling moves n by one and flips the
/// spin at the same time, so each block is tridiagonal in n.
struct parity_block {
  int parity = 1;
  std::vector<std::pair<std::size_t, spin>> basis_map;  ///< block row k -> (n = k, spin)
  std::vector<double> diag;
  std::vector<double> offdiag;

  sym_matrix matrix() const {
    sym_matrix m(diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) {
      m.set(k, k, diag[k]);
      if (k + 1 < diag.size()) m.set(k, k + 1, offdiag[k]);
    }
    return m;
  }

  std::vector<double> eigenvalues() const { return tridiag_eigenvalues(diag, offdiag); }
  eig_result eigen() const { return tridiag_eig(diag, offdiag); }
};

inline parity_block make_parity_block(int parity, const model_params& params, fock_cutoff cutoff, bool scaled = true) {
  params.validate();
  const double wt = params.omega_tilde();
  const double lam = params.lambda();
  const double unit = scaled ? 1.0 : params.omega;
  const std::size_t nb = cutoff.basis_size();
  parity_block b;
  b.parity = parity;
  b.basis_map.reserve(nb);
  b.diag.resize(nb);
  b.offdiag.resize(nb - 1);
  for (std::size_t n = 0; n < nb; ++n) {
    const spin s = parity_of(n, spin::up) == parity ? spin::up : spin::down;
    b.basis_map.emplace_back(n, s);
    b.diag[n] = unit * (static_cast<double>(n) + wt * static_cast<int>(s));
    if (n + 1 < nb) b.offdiag[n] = unit * lam * std::sqrt(static_cast<double>(n + 1));
  }
  return b;
}

/// The (+1, -1) parity blocks.
inline std::pair<parity_block, parity_block> parity_blocks(const model_params& params, fock_cutoff cutoff,
                                                           bool scaled = true) {
  return {make_parity_block(+1, params, cutoff, scaled), make_parity_block(-1, params, cutoff, scaled)};
}

/// Lowest k eigenvalues of each parity block at one coupling.
struct block_levels {
  std::vector<double> plus;
  std::vector<double> minus;
};

inline block_levels lowest_block_levels(const model_params& params, fock_cutoff cutoff, std::size_t k,
                                        bool scaled = true) {
  auto [bp, bm] = parity_blocks(params, cutoff, scaled);
  block_levels out{bp.eigenvalues(), bm.eigenvalues()};
  out.plus.resize(std::min(k, out.plus.size()));
  out.minus.resize(std::min(k, out.minus.size()));
  return out;
}

struct spectrum_table {
  std::vector<double> g;
  std::vector<std::vector<double>> plus;   ///< plus[i] ascending energies at g[i]
  std::vector<std::vector<double>> minus;
  bool scaled = true;
  std::size_t levels = 0;
};

/// Lowest `levels` energies per parity at each coupling in the grid.
/// Grid points are independent of each other.
inline spectrum_table spectrum_sweep(const model_params& base, std::span<const double> g_grid, fock_cutoff cutoff,
                                     std::size_t levels, bool scaled = true) {
  if (g_grid.empty()) throw domain_error("spectrum_sweep: empty coupling grid");
  if (levels == 0 || levels > cutoff.basis_size())
    throw domain_error("spectrum_sweep: levels must be in [1, M+1]");
  for (std::size_t i = 1; i < g_grid.size(); ++i)
    if (!(g_grid[i] > g_grid[i - 1])) throw domain_error("spectrum_sweep: coupling grid must be strictly increasing");

  spectrum_table t;
  t.scaled = scaled;
  t.levels = levels;
  t.g.assign(g_grid.begin(), g_grid.end());
  t.plus.reserve(g_grid.size());
  t.minus.reserve(g_grid.size());
  for (double g : g_grid) {
    try {
      block_levels lv = lowest_block_levels(base.with_g(g), cutoff, levels, scaled);
      t.plus.push_back(std::move(lv.plus));
      t.minus.push_back(std::move(lv.minus));
    } catch (const convergence_error& e) {
      throw convergence_error(e.index(), std::string(e.what()) + " at g = " + std::to_string(g));
    }
  }
  return t;
}

/// A degeneracy between plus-block level `plus_level` and minus-block level
/// `minus_level`.
struct crossing {
  double g_star = 0.0;
  double E_star = 0.0;
  std::size_t plus_level = 0;
  std::size_t minus_level = 0;
};

struct crossing_options {
  double energy_tol = 1e-9;   ///< bisection stops once |dE| is below this...
  double g_width = 1e-10;     ///< ...and the bracket is narrower than this
  std::size_t interior_samples = 3;  ///< per flagged cell, used to detect non-isolated crossings
};

/// Opposite-parity level crossings inside the sweep. Every pair (i, j) of
/// tracked levels is followed; each sign change of E+_i - E-_j between
/// adjacent grid points is refined by bisection in g.
inline std::vector<crossing> find_crossings(const spectrum_table& table, const model_params& base, fock_cutoff cutoff,
                                            const crossing_options& opt = {}) {
  const std::size_t k = table.levels;
  const bool scaled = table.scaled;
  auto levels_at = [&](double g) { return lowest_block_levels(base.with_g(g), cutoff, k, scaled); };
  auto sign = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };

  std::vector<crossing> out;
  for (std::size_t c = 0; c + 1 < table.g.size(); ++c) {
    const double ga = table.g[c];
    const double gb = table.g[c + 1];
    std::vector<std::pair<std::size_t, std::size_t>> flagged;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const double da = table.plus[c][i] - table.minus[c][j];
        const double db = table.plus[c + 1][i] - table.minus[c + 1][j];
        if (da == 0.0) {
          out.push_back({ga, table.plus[c][i], i, j});
        } else if (sign(da) * sign(db) < 0) {
          flagged.emplace_back(i, j);
        }
      }
    }
    if (flagged.empty()) continue;

    // Interior samples must show exactly one sign change per flagged pair.
    const std::size_t ns = opt.interior_samples;
    std::vector<block_levels> samples;
    samples.reserve(ns);
    for (std::size_t s = 1; s <= ns; ++s) samples.push_back(levels_at(ga + (gb - ga) * s / (ns + 1.0)));
    for (auto [i, j] : flagged) {
      int changes = 0;
      int prev = sign(table.plus[c][i] - table.minus[c][j]);
      for (std::size_t s = 0; s <= ns; ++s) {
        const double d = s < ns ? samples[s].plus[i] - samples[s].minus[j]
                                : table.plus[c + 1][i] - table.minus[c + 1][j];
        const int cur = sign(d);
        if (cur != 0 && cur != prev) {
          ++changes;
          prev = cur;
        }
      }
      if (changes != 1) {
        throw non_isolated_crossing_error(
            ga, gb,
            "find_crossings: levels (+" + std::to_string(i) + ", -" + std::to_string(j) +
                ") cross more than once in g cell [" + std::to_string(ga) + ", " + std::to_string(gb) +
                "]; refine the grid");
      }

      double lo = ga, hi = gb;
      int slo = sign(table.plus[c][i] - table.minus[c][j]);
      double mid = 0.5 * (lo + hi);
      block_levels at = levels_at(mid);
      for (int it = 0; it < 200; ++it) {
        const double d = at.plus[i] - at.minus[j];
        if ((std::abs(d) <= opt.energy_tol && hi - lo <= opt.g_width) || d == 0.0) break;
        if (sign(d) == slo) {
          lo = mid;
        } else {
          hi = mid;
        }
        const double next = 0.5 * (lo + hi);
        if (next <= lo || next >= hi) break;
        mid = next;
        at = levels_at(mid);
      }
      out.push_back({mid, 0.5 * (at.plus[i] + at.minus[j]), i, j});
    }
  }
  std::sort(out.begin(), out.end(), [](const crossing& a, const crossing& b) { return a.g_star < b.g_star; });
  return out;
}

/// Uniform grid of `steps` points from lo to hi inclusive.
inline std::vector<double> linear_grid(double lo, double hi, std::size_t steps) {
  if (steps == 1) return {lo};
  std::vector<double> g(steps);
  for (std::size_t i = 0; i < steps; ++i)
    g[i] = i + 1 == steps ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  return g;
}

}  // namespace juddian
