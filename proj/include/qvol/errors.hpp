#pragma once

#include <stdexcept>
#include <string>

namespace qvol {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// eigh() received a matrix whose Hermiticity defect exceeds tolerance.
struct NonHermitianInput : Error {
  using Error::Error;
};

/// The iterative eigensolver failed to converge.
struct ConvergenceFailure : Error {
  using Error::Error;
};

/// qr_unitary() hit a pivot of negligible magnitude.
struct SingularInput : Error {
  using Error::Error;
};

/// Operand dimensions are inconsistent with the declared bipartite structure.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// A claimed density matrix is not a valid state (trace, positivity, ...).
struct InvalidState : Error {
  using Error::Error;
};

/// A survey / CLI configuration failed validation.
struct InvalidConfig : Error {
  using Error::Error;
};

/// preset() was asked for a name it does not know.
struct UnknownPreset : Error {
  using Error::Error;
};

/// aggregate() received tallies whose sample-index ranges intersect.
struct OverlappingRanges : Error {
  using Error::Error;
};

}  // namespace qvol
