#pragma once

#include <stdexcept>
#include <string>

namespace bogs {

/// Invalid user-supplied configuration (grid sizes, key values, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A Fourier multiplier evaluated to a non-finite value on the grid.
struct OperatorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A dyadic scale outside what the grid resolves.
struct ScaleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Query outside the time range of a trajectory.
struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad norm/exponent parameter.
struct ParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Too few snapshots for a finite-difference verifier.
struct InsufficientDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File format problems, one class per failure mode so callers can tell
/// them apart.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MagicMismatchError : IoError {
  using IoError::IoError;
};
struct VersionMismatchError : IoError {
  using IoError::IoError;
};
struct TruncatedFileError : IoError {
  using IoError::IoError;
};

/// Solution left the resolvable regime; carries the last trusted time.
struct BlowUpError : std::runtime_error {
  double last_valid_time;
  explicit BlowUpError(const std::string& what, double t)
      : std::runtime_error(what), last_valid_time(t) {}
};

}  // namespace bogs
