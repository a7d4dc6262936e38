#pragma once
#include <stdexcept>
#include <string>

namespace pgk {

// Evaluation requested inside the Dirac-string exclusion zone.
struct StringProximityError : std::runtime_error {
  explicit StringProximityError(const std::string &what)
      : std::runtime_error(what) {}
};

// Phase-winding contour touches a zero of the field.
struct ZeroOnContourError : std::runtime_error {
  explicit ZeroOnContourError(const std::string &what)
      : std::runtime_error(what) {}
};

// Ring scan asked of a field whose components all have m - mu = 0.
struct NoRingFoundError : std::runtime_error {
  explicit NoRingFoundError(const std::string &what)
      : std::runtime_error(what) {}
};

// Quadrature or series failed to reach its target accuracy.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string &what)
      : std::runtime_error(what) {}
};

// Grid too small for a derivative stencil.
struct ResolutionError : std::runtime_error {
  explicit ResolutionError(const std::string &what)
      : std::runtime_error(what) {}
};

// Config file / key validation failure.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace pgk
