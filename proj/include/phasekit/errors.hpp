#pragma once

#include <stdexcept>
#include <string>

namespace phasekit {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct HermiticityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carries the smallest dimension that would have satisfied the tail bound.
struct TruncationError : std::runtime_error {
  int minimal_dim;
  TruncationError(const std::string& msg, int minimal_dim_)
      : std::runtime_error(msg), minimal_dim(minimal_dim_) {}
};

struct ToleranceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace phasekit
