#pragma once

#include <optional>
#include <utility>

#include "qvol/linalg.hpp"
#include "qvol/types.hpp"

namespace qvol {

/// Hermitian, positive-semidefinite, unit-trace matrix on a bipartite space,
/// with its descending eigenvalue spectrum cached.
class DensityMatrix {
 public:
  /// Validate a claimed state and compute its spectrum.
  DensityMatrix(BipartiteDims dims, Matrix m)
      : DensityMatrix(std::move(dims), std::move(m), std::nullopt) {}

  /// Trusted path for sampled states whose spectrum is known by construction.
  static DensityMatrix sampled(BipartiteDims dims, Matrix m, Spectrum spectrum) {
    return DensityMatrix(std::move(dims), std::move(m), std::move(spectrum));
  }

  const BipartiteDims& dims() const { return dims_; }
  const Matrix& matrix() const { return matrix_; }
  const Spectrum& spectrum() const { return spectrum_; }

  /// Reduced state of one subsystem.
  Matrix reduced(Subsystem keep) const { return partial_trace(matrix_, dims_, keep); }

  /// Spectrum of the reduced state of one subsystem.
  Spectrum reduced_spectrum(Subsystem keep) const {
    return Spectrum::state(eigvalsh(reduced(keep)));
  }

 private:
  DensityMatrix(BipartiteDims dims, Matrix m, std::optional<Spectrum> spectrum)
      : dims_(dims),
        matrix_(std::move(m)),
        spectrum_(spectrum ? std::move(*spectrum) : Spectrum::state(eigvalsh(matrix_))) {
    detail::check_bipartite(matrix_.rows(), matrix_.cols(), dims_, "DensityMatrix");
    const double herr = hermiticity_error(matrix_);
    if (herr > kHermTol) {
      throw InvalidState("DensityMatrix: Hermiticity defect " + std::to_string(herr));
    }
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
      throw InvalidState("DensityMatrix: trace " + std::to_string(tr) + " != 1");
    }
  }

  BipartiteDims dims_;
  Matrix matrix_;
  Spectrum spectrum_;
};

}  // namespace qvol
