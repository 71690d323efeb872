#pragma once

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "juddian/errors.hpp"
#include "juddian/juddian.hpp"
#include "juddian/rabi.hpp"

namespace juddian::io {

// Text formats shared by the CLI commands and the plot reader.
//
//   Juddian CSV:   N,index,lambda,g,E,det_residual      (10 decimals)
//   Juddian JSON:  [{"N":..,"index":..,"lambda":..,"g":..,"E":..}, ...]
//   Spectrum CSV:  g,parity,level,energy                 (12 significant digits)
//
// All numbers use '.' as decimal separator regardless of locale.

inline std::string fixed10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  return buf;
}

inline std::string sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// Value that fixed10() prints, read back.
inline double round10(double v) { return std::strtod(fixed10(v).c_str(), nullptr); }

inline const char* juddian_csv_header = "N,index,lambda,g,E,det_residual";
inline const char* spectrum_csv_header = "g,parity,level,energy";

inline void write_points_csv(std::ostream& os, const std::vector<juddian_point>& pts) {
  os << juddian_csv_header << '\n';
  for (const auto& p : pts) {
    os << p.N << ',' << p.root_index << ',' << fixed10(p.lambda) << ',' << fixed10(p.g) << ',' << fixed10(p.E)
       << ',' << fixed10(p.det_residual) << '\n';
  }
}

inline void write_points_json(std::ostream& os, const std::vector<juddian_point>& pts) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : pts) {
    nlohmann::ordered_json o;
    o["N"] = p.N;
    o["index"] = p.root_index;
    o["lambda"] = round10(p.lambda);
    o["g"] = round10(p.g);
    o["E"] = round10(p.E);
    arr.push_back(std::move(o));
  }
  os << arr.dump(2) << '\n';
}

/// Point record as stored in the JSON file.
struct point_record {
  int N = 0;
  int index = 0;
  double lambda = 0.0;
  double g = 0.0;
  double E = 0.0;
};

namespace detail {

inline std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && ptr == e;
}

inline bool parse_int(std::string_view s, long& out) {
  if (s.empty()) return false;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && ptr == e;
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> f;
  std::size_t start = 0;
  while (true) {
    const std::size_t c = line.find(',', start);
    if (c == std::string_view::npos) {
      f.push_back(line.substr(start));
      break;
    }
    f.push_back(line.substr(start, c - start));
    start = c + 1;
  }
  return f;
}

}  // namespace detail

inline std::vector<point_record> read_points_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(detail::line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  if (!doc.is_array()) throw parse_error(1, "points file must hold a JSON array");
  std::vector<point_record> out;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const auto& o = doc[k];
    auto fail = [k](const std::string& why) {
      return error("points entry " + std::to_string(k + 1) + ": " + why);
    };
    if (!o.is_object()) throw fail("not an object");
    for (const char* key : {"N", "index", "lambda", "g", "E"})
      if (!o.contains(key) || !o[key].is_number()) throw fail(std::string("missing numeric key '") + key + "'");
    point_record r;
    r.N = o["N"].get<int>();
    r.index = o["index"].get<int>();
    r.lambda = o["lambda"].get<double>();
    r.g = o["g"].get<double>();
    r.E = o["E"].get<double>();
    out.push_back(r);
  }
  return out;
}

inline void write_spectrum_csv(std::ostream& os, const spectrum_table& t) {
  os << spectrum_csv_header << '\n';
  for (std::size_t i = 0; i < t.g.size(); ++i) {
    const std::string g = sig12(t.g[i]);
    for (std::size_t k = 0; k < t.plus[i].size(); ++k) os << g << ",1," << k << ',' << sig12(t.plus[i][k]) << '\n';
    for (std::size_t k = 0; k < t.minus[i].size(); ++k) os << g << ",-1," << k << ',' << sig12(t.minus[i][k]) << '\n';
  }
}

struct spectrum_row {
  double g = 0.0;
  int parity = 1;
  std::size_t level = 0;
  double energy = 0.0;
};

inline std::vector<spectrum_row> read_spectrum_csv(std::string_view text) {
  std::vector<spectrum_row> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    if (!header_seen) {
      if (line != spectrum_csv_header)
        throw parse_error(line_no, "expected header '" + std::string(spectrum_csv_header) + "'");
      header_seen = true;
      continue;
    }
    const auto f = detail::split_commas(line);
    if (f.size() != 4) throw parse_error(line_no, "expected 4 fields, got " + std::to_string(f.size()));
    spectrum_row r;
    long parity = 0, level = 0;
    if (!detail::parse_double(f[0], r.g)) throw parse_error(line_no, "bad g value");
    if (!detail::parse_int(f[1], parity) || (parity != 1 && parity != -1))
      throw parse_error(line_no, "parity must be 1 or -1");
    if (!detail::parse_int(f[2], level) || level < 0) throw parse_error(line_no, "bad level index");
    if (!detail::parse_double(f[3], r.energy)) throw parse_error(line_no, "bad energy value");
    r.parity = static_cast<int>(parity);
    r.level = static_cast<std::size_t>(level);
    rows.push_back(r);
  }
  if (!header_seen) throw parse_error(1, "empty spectrum file");
  return rows;
}

}  // namespace juddian::io
