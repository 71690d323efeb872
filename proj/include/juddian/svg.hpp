#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "juddian/io.hpp"

namespace juddian::svg {

struct plot_options {
  bool baselines = true;
  double width = 800.0;
  double height = 600.0;
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Round-number tick step giving roughly `target` intervals.
inline double tick_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (raw <= m * mag) return m * mag;
  return 10.0 * mag;
}

}  // namespace detail

/// Static SVG 1.1 energy-level diagram: spectrum levels as polylines per
/// (parity, level), Juddian points as diamonds and, optionally, the
/// baselines E = N - lambda(g)^2 for N = 1..max N among the points.
inline std::string render(const std::vector<io::spectrum_row>& spectrum, const std::vector<io::point_record>& points,
                          const plot_options& opt = {}) {
  if (spectrum.empty()) throw error("svg::render: spectrum has no rows");

  std::map<std::pair<int, std::size_t>, std::vector<std::pair<double, double>>> curves;
  double gmin = spectrum.front().g, gmax = spectrum.front().g;
  double emin = spectrum.front().energy, emax = spectrum.front().energy;
  for (const auto& r : spectrum) {
    curves[{-r.parity, r.level}].emplace_back(r.g, r.energy);
    gmin = std::min(gmin, r.g);
    gmax = std::max(gmax, r.g);
    emin = std::min(emin, r.energy);
    emax = std::max(emax, r.energy);
  }
  if (gmax == gmin) gmax = gmin + 1.0;
  if (emax == emin) emax = emin + 1.0;
  const double pad = 0.03 * (emax - emin);
  emin -= pad;
  emax += pad;

  // lambda = 2 g / omega; omega is recovered from the point records.
  double omega = 1.0;
  int max_n = 0;
  for (const auto& p : points) {
    max_n = std::max(max_n, p.N);
    if (p.lambda > 0.0) omega = 2.0 * p.g / p.lambda;
  }

  const double left = 70.0, right = 20.0, top = 20.0, bottom = 55.0;
  const double pw = opt.width - left - right;
  const double ph = opt.height - top - bottom;
  auto sx = [&](double g) { return left + (g - gmin) / (gmax - gmin) * pw; };
  auto sy = [&](double e) { return top + (emax - e) / (emax - emin) * ph; };
  using detail::num;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(opt.width) << "\" height=\""
     << num(opt.height) << "\" viewBox=\"0 0 " << num(opt.width) << ' ' << num(opt.height) << "\">\n"
     << "<defs><clipPath id=\"plot-area\"><rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\""
     << num(pw) << "\" height=\"" << num(ph) << "\"/></clipPath></defs>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << num(opt.width) << "\" height=\"" << num(opt.height)
     << "\" fill=\"white\"/>\n";

  // axes
  os << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
     << "\" fill=\"none\"/>\n";
  const double gstep = detail::tick_step(gmax - gmin, 8);
  for (double t = std::ceil(gmin / gstep) * gstep; t <= gmax + 1e-12; t += gstep) {
    os << "<line x1=\"" << num(sx(t)) << "\" y1=\"" << num(top + ph) << "\" x2=\"" << num(sx(t)) << "\" y2=\""
       << num(top + ph + 5) << "\"/>";
    os << "<text x=\"" << num(sx(t)) << "\" y=\"" << num(top + ph + 19) << "\" text-anchor=\"middle\" stroke=\"none\">"
       << detail::tick_label(std::abs(t) < 1e-12 ? 0.0 : t) << "</text>\n";
  }
  const double estep = detail::tick_step(emax - emin, 8);
  for (double t = std::ceil(emin / estep) * estep; t <= emax + 1e-12; t += estep) {
    os << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(sy(t)) << "\" x2=\"" << num(left) << "\" y2=\""
       << num(sy(t)) << "\"/>";
    os << "<text x=\"" << num(left - 8) << "\" y=\"" << num(sy(t) + 4) << "\" text-anchor=\"end\" stroke=\"none\">"
       << detail::tick_label(std::abs(t) < 1e-12 ? 0.0 : t) << "</text>\n";
  }
  os << "<text class=\"axis-label\" x=\"" << num(left + pw / 2) << "\" y=\"" << num(opt.height - 12)
     << "\" text-anchor=\"middle\" stroke=\"none\" font-size=\"15\">g</text>\n";
  os << "<text class=\"axis-label\" x=\"18\" y=\"" << num(top + ph / 2)
     << "\" text-anchor=\"middle\" stroke=\"none\" font-size=\"15\">E</text>\n";
  os << "</g>\n";

  if (opt.baselines && max_n > 0) {
    os << "<g class=\"baselines\" clip-path=\"url(#plot-area)\" fill=\"none\" stroke=\"#b0b0b0\" stroke-width=\"1\">\n";
    constexpr int samples = 200;
    for (int n = 1; n <= max_n; ++n) {
      os << "<polyline data-N=\"" << n << "\" points=\"";
      for (int s = 0; s <= samples; ++s) {
        const double g = gmin + (gmax - gmin) * s / samples;
        const double lam = 2.0 * g / omega;
        os << (s ? " " : "") << num(sx(g)) << ',' << num(sy(n - lam * lam));
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  }

  os << "<g class=\"levels\" clip-path=\"url(#plot-area)\" fill=\"none\" stroke=\"#202020\" stroke-width=\"1.3\">\n";
  for (const auto& [key, pts] : curves) {
    const int parity = -key.first;
    os << "<polyline data-parity=\"" << parity << "\" data-level=\"" << key.second << "\"";
    if (parity < 0) os << " stroke-dasharray=\"5,3\"";
    os << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      os << (i ? " " : "") << num(sx(pts[i].first)) << ',' << num(sy(pts[i].second));
    os << "\"/>\n";
  }
  os << "</g>\n";

  if (!points.empty()) {
    os << "<g class=\"juddian-points\" fill=\"#1f4fbf\" stroke=\"black\" stroke-width=\"0.8\">\n";
    constexpr double r = 5.0;
    for (const auto& p : points) {
      const double x = sx(p.g), y = sy(p.E);
      os << "<polygon data-N=\"" << p.N << "\" points=\"" << num(x) << ',' << num(y - r) << ' ' << num(x + r) << ','
         << num(y) << ' ' << num(x) << ',' << num(y + r) << ' ' << num(x - r) << ',' << num(y) << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace juddian::svg
