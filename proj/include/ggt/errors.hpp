#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ggt {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid or inconsistent configuration (bad key, out-of-range value).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Mismatched vector/matrix dimensions.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// An optimizer step produced non-finite state. Carries the step index and
/// the coordinate with the largest magnitude before the failure was detected.
class DivergenceError : public Error {
 public:
  DivergenceError(std::int64_t step, int coord, double value)
      : Error("non-finite state at step " + std::to_string(step) + ", coordinate " +
              std::to_string(coord) + " (value " + std::to_string(value) + ")"),
        step(step),
        coord(coord),
        value(value) {}

  std::int64_t step;
  int coord;
  double value;
};

/// A gradient was requested at an infeasible point.
class FeasibilityError : public Error {
 public:
  explicit FeasibilityError(const std::string& what) : Error(what) {}
};

}  // namespace ggt
