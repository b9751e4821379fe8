#pragma once

#include <cstdint>

#include "qvol/rng.hpp"
#include "qvol/state.hpp"
#include "qvol/types.hpp"

namespace qvol {

/// Recipe for one reproducible random state: identical (seed, sample_index)
/// pairs always produce the identical state.
struct SampleSpec {
  BipartiteDims dims;
  int rank = 0;  // number of nonzero eigenvalues, in [1, dims.n()]
  std::uint64_t seed = 0;
  std::uint64_t sample_index = 0;

  void validate() const {
    if (rank < 1 || rank > dims.n()) {
      throw InvalidConfig("SampleSpec: rank " + std::to_string(rank) + " outside [1, " +
                          std::to_string(dims.n()) + "]");
    }
  }
};

/// Matrix of i.i.d. complex Gaussian entries.
Matrix sample_ginibre(int n, RngStream& stream);

/// Haar-distributed unitary: phase-fixed QR factor of a Ginibre draw.
Matrix sample_haar_unitary(int n, RngStream& stream);

/// Spectrum with exactly `rank` nonzero entries, uniform (Lebesgue) on the
/// (rank-1)-simplex via sorted-uniform spacings, zero-padded to length n.
Spectrum sample_simplex(int n, int rank, RngStream& stream);

/// Random density matrix rho = U D U† under the product measure
/// (Haar unitary) x (uniform simplex spectrum), rank-restricted as requested.
DensityMatrix sample_state(const SampleSpec& spec);

}  // namespace qvol
