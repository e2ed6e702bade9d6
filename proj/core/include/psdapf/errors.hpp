#pragma once

#include <stdexcept>
#include <string>

#include "psdapf/types.hpp"

namespace psdapf {

/// Base class for every error raised by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or non-finite input values.
struct InputError : Error {
  using Error::Error;
};

/// A parameter record violates one of its constraints.
struct ParamError : Error {
  using Error::Error;
};

/// Degenerate geometry (coincident points, zero-length directions).
struct GeometryError : Error {
  using Error::Error;
};

/// Calibration data is insufficient or out of range.
struct CalibrationError : Error {
  using Error::Error;
};

/// A regression fit is underdetermined.
struct FitError : Error {
  using Error::Error;
};

/// A scenario, config, or stream file failed schema validation.
struct LoadError : Error {
  using Error::Error;
};

/// The net force vanished away from the goal; carries the stuck position.
struct LocalMinimumError : Error {
  LocalMinimumError(const std::string& what, const Vec3& where)
      : Error(what), position(where) {}

  Vec3 position;
};

}  // namespace psdapf
