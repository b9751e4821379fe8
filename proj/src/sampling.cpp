#include "qvol/sampling.hpp"

#include <algorithm>
#include <vector>

#include "qvol/linalg.hpp"

namespace qvol {

Matrix sample_ginibre(int n, RngStream& stream) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g(i, j) = stream.complex_normal();
    }
  }
  return g;
}

Matrix sample_haar_unitary(int n, RngStream& stream) {
  for (int attempt = 0; attempt <= 3; ++attempt) {
    try {
      return qr_unitary(sample_ginibre(n, stream));
    } catch (const SingularInput&) {
      // a singular Ginibre draw has probability ~0; redraw, at most 3 retries
    }
  }
  throw SingularInput("sample_haar_unitary: four singular Ginibre draws in a row");
}

Spectrum sample_simplex(int n, int rank, RngStream& stream) {
  RealVector values = RealVector::Zero(n);
  if (rank == 1) {
    values[0] = 1.0;
    return Spectrum::state(std::move(values));
  }
  std::vector<double> cuts(static_cast<std::size_t>(rank) - 1);
  while (true) {
    for (double& c : cuts) c = stream.uniform01();
    std::sort(cuts.begin(), cuts.end());
    double prev = 0.0;
    bool degenerate = false;
    for (int k = 0; k < rank; ++k) {
      const double next = k + 1 < rank ? cuts[static_cast<std::size_t>(k)] : 1.0;
      values[k] = next - prev;
      if (values[k] <= 0.0) {
        degenerate = true;
        break;
      }
      prev = next;
    }
    if (!degenerate) break;
  }
  return Spectrum::state(std::move(values));
}

DensityMatrix sample_state(const SampleSpec& spec) {
  spec.validate();
  RngStream stream(spec.seed, spec.sample_index);
  // Fixed draw order (spectrum, then unitary) pins the stream layout.
  Spectrum spectrum = sample_simplex(spec.dims.n(), spec.rank, stream);
  const Matrix u = sample_haar_unitary(spec.dims.n(), stream);
  Matrix rho = u * spectrum.values().asDiagonal() * u.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix::sampled(spec.dims, std::move(rho), std::move(spectrum));
}

}  // namespace qvol
