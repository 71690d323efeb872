#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "juddian/boson.hpp"
#include "juddian/io.hpp"
#include "juddian/juddian.hpp"
#include "juddian/numerics/sym_eig.hpp"
#include "juddian/rabi.hpp"
#include "juddian/svg.hpp"

namespace juddian::cli {

// Command bodies behind the `juddian` executable. Each writes its artifact
// to `out`, diagnostics to `err`, and returns the process exit status.
// Argument parsing and file handling live in tools/juddian.cpp.

enum class output_format { csv, json };

struct juddian_args {
  int max_n = 4;
  double omega = 1.0;
  double omega0 = 1.0;
  output_format format = output_format::csv;
};

/// All Juddian points for N = 1..max_n, ordered by (N, g).
inline std::vector<juddian_point> collect_points(const juddian_args& a, std::ostream& err) {
  if (a.max_n < 1) throw domain_error("--max-n must be >= 1");
  const model_params params{a.omega, a.omega0, 0.0};
  std::vector<juddian_point> all;
  for (int n = 1; n <= a.max_n; ++n) {
    juddian_point_set set = juddian_points(n, params);
    if (set.shortfall)
      err << "warning: N = " << n << ": " << set.points.size() << " of " << set.expected
          << " compatibility roots are positive and real\n";
    for (double x : set.near_double) err << "warning: N = " << n << ": near-double root flagged at x = " << x << '\n';
    all.insert(all.end(), set.points.begin(), set.points.end());
  }
  return all;
}

inline int cmd_juddian(const juddian_args& a, std::ostream& out, std::ostream& err) {
  const auto pts = collect_points(a, err);
  if (a.format == output_format::json) {
    io::write_points_json(out, pts);
  } else {
    io::write_points_csv(out, pts);
  }
  return 0;
}

struct spectrum_args {
  double g_min = 0.0;
  double g_max = 0.8;
  std::size_t g_steps = 201;
  std::size_t cutoff = 100;
  std::size_t levels = 8;
  double omega = 1.0;
  double omega0 = 1.0;
  bool unscaled = false;
};

inline int cmd_spectrum(const spectrum_args& a, std::ostream& out, std::ostream&) {
  std::vector<double> grid;
  if (a.g_steps == 1 && a.g_min == a.g_max) {
    grid = {a.g_min};
  } else {
    if (!(a.g_min < a.g_max)) throw domain_error("--g-min must be < --g-max");
    if (a.g_steps < 2) throw domain_error("--g-steps must be >= 2");
    grid = linear_grid(a.g_min, a.g_max, a.g_steps);
  }
  const model_params base{a.omega, a.omega0, 0.0};
  const spectrum_table t = spectrum_sweep(base, grid, {a.cutoff}, a.levels, !a.unscaled);
  io::write_spectrum_csv(out, t);
  return 0;
}

struct verify_args {
  int n = 1;
  std::size_t cutoff = 100;
  double omega = 1.0;
  double omega0 = 1.0;
  double tolerance = 1e-6;
};

/// Per-point verification table; status 0 iff every gap and residual is
/// within tolerance.
inline int cmd_verify(const verify_args& a, std::ostream& out, std::ostream& err) {
  if (a.n < 1) throw domain_error("--n must be >= 1");
  const model_params params{a.omega, a.omega0, 0.0};
  const juddian_point_set set = juddian_points(a.n, params);
  const fock_cutoff cutoff{a.cutoff};

  out << "N,index,g,E,det_residual,eigen_residual,degeneracy_gap,status\n";
  bool ok = !set.points.empty();
  for (const auto& p : set.points) {
    verification v;
    try {
      v = verify_point(p, cutoff);
    } catch (const error& e) {
      err << "error: point N = " << p.N << ", index " << p.root_index << ": " << e.what() << '\n';
      out << p.N << ',' << p.root_index << ',' << io::fixed10(p.g) << ',' << io::fixed10(p.E) << ','
          << io::sig12(p.det_residual) << ",nan,nan,FAIL\n";
      ok = false;
      continue;
    }
    const bool pass = v.point.degeneracy_gap <= a.tolerance && v.eigen_residual <= a.tolerance &&
                      p.det_residual <= a.tolerance;
    ok = ok && pass;
    out << p.N << ',' << p.root_index << ',' << io::fixed10(p.g) << ',' << io::fixed10(p.E) << ','
        << io::sig12(p.det_residual) << ',' << io::sig12(v.eigen_residual) << ',' << io::sig12(v.point.degeneracy_gap)
        << ',' << (pass ? "PASS" : "FAIL") << '\n';
  }
  if (set.points.empty()) err << "error: no Juddian points of order " << a.n << " at these parameters\n";
  if (!ok)
    err << "verification failed at cutoff M = " << a.cutoff << " (tolerance " << a.tolerance
        << "); a larger --cutoff may be needed\n";
  return ok ? 0 : 1;
}

enum class oscillator_type { displaced, squeezed };

struct oscillator_args {
  oscillator_type type = oscillator_type::displaced;
  double lambda = 1.0;
  std::size_t cutoff = 100;
  std::size_t levels = 10;
};

struct oscillator_report {
  std::vector<double> numeric;
  std::vector<double> analytic;
  double max_deviation = 0.0;
};

/// Lowest levels of the truncated oscillator against n + 1/2 (displaced)
/// or (n + 1/2) sqrt(1 - 4 lambda^2) (squeezed).
inline oscillator_report oscillator_levels(const oscillator_args& a) {
  const fock_cutoff cutoff{a.cutoff};
  if (a.levels == 0 || a.levels > cutoff.basis_size()) throw domain_error("--levels must be in [1, M+1]");
  double scale = 1.0;
  sym_matrix h;
  if (a.type == oscillator_type::displaced) {
    h = displaced_osc_hamiltonian(a.lambda, cutoff);
  } else {
    scale = squeeze_params(a.lambda).omega;
    h = squeezed_osc_hamiltonian(a.lambda, cutoff);
  }
  const eig_result r = sym_eig(h);
  oscillator_report rep;
  for (std::size_t n = 0; n < a.levels; ++n) {
    rep.numeric.push_back(r.values[n]);
    rep.analytic.push_back((static_cast<double>(n) + 0.5) * scale);
    rep.max_deviation = std::max(rep.max_deviation, std::abs(rep.numeric.back() - rep.analytic.back()));
  }
  return rep;
}

inline int cmd_oscillator(const oscillator_args& a, std::ostream& out, std::ostream&) {
  const oscillator_report rep = oscillator_levels(a);
  out << "n,numeric,analytic,deviation\n";
  for (std::size_t n = 0; n < rep.numeric.size(); ++n)
    out << n << ',' << io::sig12(rep.numeric[n]) << ',' << io::sig12(rep.analytic[n]) << ','
        << io::sig12(rep.numeric[n] - rep.analytic[n]) << '\n';
  out << "max_deviation," << io::sig12(rep.max_deviation) << '\n';
  return 0;
}

struct plot_args {
  std::string spectrum_text;
  std::string points_text;  ///< empty: no points
  bool baselines = true;
};

inline int cmd_plot(const plot_args& a, std::ostream& out, std::ostream&) {
  const auto spectrum = io::read_spectrum_csv(a.spectrum_text);
  std::vector<io::point_record> points;
  const bool blank = a.points_text.find_first_not_of(" \t\r\n") == std::string::npos;
  if (!blank) points = io::read_points_json(a.points_text);
  svg::plot_options opt;
  opt.baselines = a.baselines;
  out << svg::render(spectrum, points, opt);
  return 0;
}

}  // namespace juddian::cli
