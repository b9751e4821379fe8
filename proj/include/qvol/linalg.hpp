#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>

#include "qvol/errors.hpp"
#include "qvol/types.hpp"

namespace qvol {

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
struct EighResult {
  RealVector eigenvalues;  // descending
  Matrix eigenvectors;     // columns aligned with eigenvalues
};

namespace detail {

inline void check_square(Eigen::Index rows, Eigen::Index cols, const char* op) {
  if (rows != cols) {
    throw DimensionMismatch(std::string(op) + ": matrix is " + std::to_string(rows) + "x" +
                            std::to_string(cols) + ", expected square");
  }
}

inline void check_bipartite(Eigen::Index rows, Eigen::Index cols, const BipartiteDims& dims,
                            const char* op) {
  check_square(rows, cols, op);
  if (rows != dims.n()) {
    throw DimensionMismatch(std::string(op) + ": matrix dimension " + std::to_string(rows) +
                            " does not match bipartite " + std::to_string(dims.n1) + "x" +
                            std::to_string(dims.n2));
  }
}

}  // namespace detail

/// Hermitian eigendecomposition: m = V diag(lambda) V†, lambda descending.
template <typename Derived>
EighResult eigh(const Eigen::MatrixBase<Derived>& m) {
  detail::check_square(m.rows(), m.cols(), "eigh");
  const double herr = hermiticity_error(m);
  if (herr > kHermTol) {
    throw NonHermitianInput("eigh: Hermiticity defect " + std::to_string(herr) +
                            " exceeds 1e-12");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("eigh: eigensolver did not converge");
  }
  EighResult out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

/// Descending eigenvalues of a Hermitian matrix (no eigenvectors).
template <typename Derived>
RealVector eigvalsh(const Eigen::MatrixBase<Derived>& m) {
  detail::check_square(m.rows(), m.cols(), "eigvalsh");
  const double herr = hermiticity_error(m);
  if (herr > kHermTol) {
    throw NonHermitianInput("eigvalsh: Hermiticity defect " + std::to_string(herr) +
                            " exceeds 1e-12");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("eigvalsh: eigensolver did not converge");
  }
  return solver.eigenvalues().reverse();
}

/// Unitary QR factor of a square matrix, with the phase convention that the
/// diagonal of R is real and positive (so the map Ginibre -> Q is Haar).
template <typename Derived>
Matrix qr_unitary(const Eigen::MatrixBase<Derived>& g) {
  detail::check_square(g.rows(), g.cols(), "qr_unitary");
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const auto& packed = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex r = packed(j, j);
    const double mag = std::abs(r);
    if (mag < 1e-300) {
      throw SingularInput("qr_unitary: pivot " + std::to_string(j) + " has magnitude < 1e-300");
    }
    q.col(j) *= r / mag;
  }
  return q;
}

/// Trace out one subsystem of a bipartite operator; `keep` names the survivor.
/// Index convention: composite index = a * n2 + b.
template <typename Derived>
Matrix partial_trace(const Eigen::MatrixBase<Derived>& rho, const BipartiteDims& dims,
                     Subsystem keep) {
  detail::check_bipartite(rho.rows(), rho.cols(), dims, "partial_trace");
  const int n1 = dims.n1;
  const int n2 = dims.n2;
  if (keep == Subsystem::A) {
    Matrix out(n1, n1);
    for (int a = 0; a < n1; ++a) {
      for (int a2 = 0; a2 < n1; ++a2) {
        out(a, a2) = rho.block(a * n2, a2 * n2, n2, n2).trace();
      }
    }
    return out;
  }
  Matrix out = Matrix::Zero(n2, n2);
  for (int a = 0; a < n1; ++a) {
    out += rho.block(a * n2, a * n2, n2, n2);
  }
  return out;
}

/// Transpose the indices of one subsystem. Involutive and trace-preserving.
template <typename Derived>
Matrix partial_transpose(const Eigen::MatrixBase<Derived>& rho, const BipartiteDims& dims,
                         Subsystem transposed) {
  detail::check_bipartite(rho.rows(), rho.cols(), dims, "partial_transpose");
  const int n1 = dims.n1;
  const int n2 = dims.n2;
  Matrix out(dims.n(), dims.n());
  for (int a = 0; a < n1; ++a) {
    for (int a2 = 0; a2 < n1; ++a2) {
      if (transposed == Subsystem::B) {
        out.block(a * n2, a2 * n2, n2, n2) = rho.block(a * n2, a2 * n2, n2, n2).transpose();
      } else {
        out.block(a * n2, a2 * n2, n2, n2) = rho.block(a2 * n2, a * n2, n2, n2);
      }
    }
  }
  return out;
}

}  // namespace qvol
