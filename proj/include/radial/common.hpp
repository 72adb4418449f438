#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radial {

// All numerics run in extended precision. Production grids put matrix norms
// near 1e9 and the regression tables quote 10-12 digits, which leaves no
// headroom in plain double once eigensolver roundoff is accounted for.
using Real = long double;

using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Bad argument or input outside the documented domain.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An iteration failed to converge or a result is not finite.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed expression or config text.
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

/// A file could not be opened, read, or written.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace radial
