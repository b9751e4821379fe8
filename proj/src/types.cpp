#include "qvol/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qvol {

Spectrum Spectrum::state(RealVector values) {
  if (values.size() == 0) {
    throw InvalidState("Spectrum: empty eigenvalue list");
  }
  std::sort(values.data(), values.data() + values.size(), std::greater<>());

  const double lo = values[values.size() - 1];
  if (lo < -kEigNoise) {
    throw InvalidState("Spectrum: eigenvalue " + std::to_string(lo) +
                       " below the -1e-10 noise band; not a state");
  }
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0) values[i] = 0.0;
  }

  const double total = values.sum();
  if (std::abs(total - 1.0) > kSpectrumSumTol) {
    throw InvalidState("Spectrum: eigenvalues sum to " + std::to_string(total) +
                       ", expected 1 within 1e-9");
  }
  values /= total;
  if (values[0] > 1.0) values[0] = 1.0;

  RealVector logs(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    logs[i] = values[i] > 0.0 ? std::log(values[i]) : -std::numeric_limits<double>::infinity();
  }
  return Spectrum(std::move(values), std::move(logs));
}

}  // namespace qvol
