#pragma once

#include <stdexcept>
#include <string>

namespace monopole {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad inputs: non-finite values, broken invariants, malformed files/flags.
struct ValidationError : Error {
  using Error::Error;
};

/// A requested numerical tolerance could not be met, or a cross-check failed.
struct ToleranceError : Error {
  using Error::Error;
};

/// Evaluation at or too close to a singular locus: the origin, a string
/// half-line, an axis a path must avoid, or the integrator's minimum radius.
struct SingularityError : Error {
  using Error::Error;
};

}  // namespace monopole
