#pragma once

#include <stdexcept>
#include <string>

namespace barn {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cell index outside the grid.
struct BoundsError : Error {
  using Error::Error;
};

// Invalid parameter value (bad thresholds, even kernel, zero stddev, ...).
struct ConfigError : Error {
  using Error::Error;
};

// Ray cast started from an occupied cell.
struct InvalidOriginError : Error {
  using Error::Error;
};

// No free cell on a required edge column of the configuration space.
struct NoEndpointError : Error {
  using Error::Error;
};

// Start or goal is occupied.
struct InvalidEndpointError : Error {
  using Error::Error;
};

// Start and goal are in different connected components.
struct NoPathError : Error {
  using Error::Error;
};

// Metric requested on a grid with no occupied cell.
struct NoObstacleError : Error {
  using Error::Error;
};

// Environment generation hit the per-parameter-set attempt cap.
struct GenerationExhaustedError : Error {
  using Error::Error;
};

// Training loss became non-finite.
struct DivergenceError : Error {
  DivergenceError(const std::string& what, int epoch_) : Error(what), epoch(epoch_) {}
  int epoch = -1;
};

// Malformed map / model / manifest file.
struct FormatError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace barn
