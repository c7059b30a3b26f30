#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace halfhopf {

/// Short scientific rendering for diagnostics; std::to_string rounds small
/// tails to 0.000000.
inline std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

/// Precondition or schema violation in caller-supplied data.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A resampling step would silently lose spectral content (aliasing,
/// truncation tail above the configured limit).
class ResolutionError : public std::runtime_error {
 public:
  explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// Pointwise normalization onto the sphere is undefined (|u| too small).
class ProjectionError : public std::runtime_error {
 public:
  explicit ProjectionError(const std::string& what) : std::runtime_error(what) {}
};

/// The gradient flow could not make progress (energy increased after all
/// permitted step halvings).
class FlowError : public std::runtime_error {
 public:
  explicit FlowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace halfhopf
