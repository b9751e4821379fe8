#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qvol/errors.hpp"

namespace qvol {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Tolerances shared across the toolkit.
inline constexpr double kHermTol = 1e-12;        // max |M - M†| for Hermitian-tagged matrices
inline constexpr double kTraceTol = 1e-12;       // |tr(rho) - 1| for density matrices
inline constexpr double kSpectrumSumTol = 1e-9;  // |sum(p) - 1| before renormalization
inline constexpr double kEigNoise = 1e-10;       // eigenvalue noise band around zero
inline constexpr double kEntropySlack = 1e-12;   // slack for >= 0 entropy predicates
inline constexpr double kRankCutoff = 1e-12;     // eigenvalues above this count towards the rank

enum class Subsystem { A, B };

inline Subsystem other(Subsystem s) { return s == Subsystem::A ? Subsystem::B : Subsystem::A; }
inline const char* name(Subsystem s) { return s == Subsystem::A ? "A" : "B"; }

/// Dimensions of a bipartite Hilbert space, N = N1 * N2 with N1, N2 >= 2.
struct BipartiteDims {
  int n1 = 2;
  int n2 = 2;

  BipartiteDims() = default;
  BipartiteDims(int n1_, int n2_) : n1(n1_), n2(n2_) {
    if (n1 < 2 || n2 < 2) {
      throw DimensionMismatch("BipartiteDims: subsystem dimensions must be >= 2, got " +
                              std::to_string(n1) + "x" + std::to_string(n2));
    }
  }

  int n() const { return n1 * n2; }
  int dim(Subsystem s) const { return s == Subsystem::A ? n1 : n2; }

  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

/// Descending probability spectrum of a quantum state.
///
/// Construction clamps eigenvalue noise in [-kEigNoise, 0) to zero, rejects
/// anything more negative, checks the sum against 1 and renormalizes exactly.
/// Natural logs of the entries are cached for the entropy hot path.
class Spectrum {
 public:
  /// Build from the raw eigenvalues of a claimed density matrix (any order).
  static Spectrum state(RealVector values);

  const RealVector& values() const { return values_; }
  /// ln(p_i); -inf at exact zeros. Aligned with values().
  const RealVector& log_values() const { return logs_; }

  Eigen::Index size() const { return values_.size(); }
  double operator[](Eigen::Index i) const { return values_[i]; }
  double lambda_max() const { return values_[0]; }
  double sum() const { return values_.sum(); }

  /// Number of entries above the rank cutoff.
  Eigen::Index rank(double cutoff = kRankCutoff) const {
    return (values_.array() > cutoff).count();
  }

 private:
  Spectrum(RealVector values, RealVector logs)
      : values_(std::move(values)), logs_(std::move(logs)) {}

  RealVector values_;  // descending
  RealVector logs_;
};

/// max_ij |M(i,j) - conj(M(j,i))|.
template <typename Derived>
double hermiticity_error(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace qvol
