#include "qvol/entropy.hpp"

#include <cmath>

namespace qvol {

double log_omega_q(const Spectrum& s, double q) {
  // ln sum_i p_i^q = q ln(p_max) + ln sum_i exp(q (ln p_i - ln p_max)).
  // Entries are descending, so the first log is the anchor and the rescaled
  // sum starts at 1; tiny eigenvalues underflow harmlessly inside the sum.
  const RealVector& logs = s.log_values();
  const double anchor = logs[0];
  double sum = 0.0;
  for (Eigen::Index i = 0; i < logs.size(); ++i) {
    if (s[i] > 0.0) sum += std::exp(q * (logs[i] - anchor));
  }
  return q * anchor + std::log(sum);
}

double omega_q(const Spectrum& s, double q) { return std::exp(log_omega_q(s, q)); }

double von_neumann_entropy(const Spectrum& s) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > 0.0) acc -= s[i] * s.log_values()[i];
  }
  return acc;
}

double tsallis_entropy(const Spectrum& s, EntropyOrder q) {
  if (q.is_infinite()) return 0.0;
  const double qv = q.value();
  if (std::abs(qv - 1.0) < kVonNeumannBranchWidth) return von_neumann_entropy(s);
  return (1.0 - omega_q(s, qv)) / (qv - 1.0);
}

double renyi_entropy(const Spectrum& s, EntropyOrder q) {
  if (q.is_infinite()) return -std::log(s.lambda_max());
  const double qv = q.value();
  if (std::abs(qv - 1.0) < kVonNeumannBranchWidth) return von_neumann_entropy(s);
  return log_omega_q(s, qv) / (1.0 - qv);
}

double conditional_entropy(const Spectrum& joint, const Spectrum& conditioning,
                           const EntropyParams& params) {
  if (params.order.is_infinite()) {
    return std::log(conditioning.lambda_max() / joint.lambda_max());
  }
  const double q = params.order.value();
  if (params.kind == EntropyKind::VonNeumann || std::abs(q - 1.0) < kVonNeumannBranchWidth) {
    return von_neumann_entropy(joint) - von_neumann_entropy(conditioning);
  }
  const double log_joint = log_omega_q(joint, q);
  const double log_cond = log_omega_q(conditioning, q);
  if (params.kind == EntropyKind::Renyi) {
    return (log_joint - log_cond) / (1.0 - q);
  }
  // Tsallis: (S_q(AB) - S_q(cond)) / omega_q(cond) = (1 - omega_AB/omega_cond)/(q-1).
  // The ratio form stays finite-signed even when both omegas underflow.
  return (1.0 - std::exp(log_joint - log_cond)) / (q - 1.0);
}

ConditionalEntropyValue conditional_entropy(const DensityMatrix& rho, Subsystem conditioning,
                                            const EntropyParams& params) {
  const Spectrum reduced = rho.reduced_spectrum(conditioning);
  return {conditional_entropy(rho.spectrum(), reduced, params), conditioning, params.order,
          params.kind};
}

}  // namespace qvol
