#pragma once

#include <stdexcept>
#include <string>

namespace axtcp {

// Base class for all model-level failures. CLI maps these to exit code 2.
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested (mode, stations, MCS) cell is not defined (N/A in the rate tables).
struct UnavailableMcs : ModelError {
  using ModelError::ModelError;
};

// The (mode, stations, MCS) tuple is outside the supported grid.
struct UnknownCombination : ModelError {
  using ModelError::ModelError;
};

// Not even a single-MSDU MPDU fits inside the PPDU time limit.
struct ZeroCapacity : ModelError {
  using ModelError::ModelError;
};

// A PPDU would exceed the maximum allowed transmission time.
struct ExceedsPpduLimit : ModelError {
  using ModelError::ModelError;
};

// Requested A-MPDU count is outside the feasible range for the MSDU count.
struct InfeasibleX : ModelError {
  using ModelError::ModelError;
};

// Instance too large for the exhaustive reference search.
struct TooLarge : ModelError {
  using ModelError::ModelError;
};

// Invalid scenario or simulation configuration.
struct ConfigError : ModelError {
  using ModelError::ModelError;
};

}  // namespace axtcp
