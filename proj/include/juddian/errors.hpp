#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace juddian {

/// Base for every failure raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An input violated a documented precondition.
class domain_error : public error {
public:
  using error::error;
};

/// The eigen iteration did not converge for one eigenvalue.
class convergence_error : public error {
public:
  convergence_error(std::size_t index, const std::string& what)
      : error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

/// null_vector() was handed a matrix that is numerically nonsingular.
class full_rank_error : public error {
public:
  using error::error;
};

/// Fewer real roots than required were found after bracket expansion.
class root_shortfall_error : public error {
public:
  root_shortfall_error(std::size_t expected, std::size_t found, const std::string& what)
      : error(what), expected_(expected), found_(found) {}
  std::size_t expected() const noexcept { return expected_; }
  std::size_t found() const noexcept { return found_; }

private:
  std::size_t expected_;
  std::size_t found_;
};

/// The Fock cutoff is too small for the requested quantity.
class cutoff_error : public error {
public:
  using error::error;
};

/// Two or more crossings of one level pair inside a single sweep cell.
class non_isolated_crossing_error : public error {
public:
  non_isolated_crossing_error(double g_lo, double g_hi, const std::string& what)
      : error(what), g_lo_(g_lo), g_hi_(g_hi) {}
  double g_lo() const noexcept { return g_lo_; }
  double g_hi() const noexcept { return g_hi_; }

private:
  double g_lo_;
  double g_hi_;
};

/// Malformed input file (CSV or JSON) with the offending line.
class parse_error : public error {
public:
  parse_error(std::size_t line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace juddian
