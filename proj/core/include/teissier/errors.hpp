#pragma once

#include <stdexcept>
#include <string>

namespace teissier {

/// Malformed or out-of-domain input (dimension mismatch, not m-primary, ...).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Interpolation failed to stabilize before the hard cap.
struct StabilizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An identity the underlying theorems guarantee did not hold.
/// Always indicates an implementation bug, never bad user input.
struct TheoremViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace teissier
