#include "qvol/criteria.hpp"

#include <cmath>
#include <limits>

#include "qvol/linalg.hpp"

namespace qvol {

void QGrid::validate() const {
  if (points.empty() && !include_infinity) {
    throw InvalidConfig("QGrid: empty grid");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i] > 0.0)) {
      throw InvalidConfig("QGrid: point " + std::to_string(points[i]) + " is not positive");
    }
    if (i > 0 && !(points[i] > points[i - 1])) {
      throw InvalidConfig("QGrid: points must be strictly ascending");
    }
  }
  if (tolerance < 0.0) {
    throw InvalidConfig("QGrid: negative tolerance");
  }
}

QGrid QGrid::geometric(double lo, double hi, int count, bool include_infinity, double tolerance) {
  if (count < 2 || !(lo > 0.0) || !(hi > lo)) {
    throw InvalidConfig("QGrid::geometric: need count >= 2 and 0 < lo < hi");
  }
  QGrid grid;
  grid.points.resize(static_cast<std::size_t>(count));
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) {
    grid.points[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
  }
  grid.points.back() = hi;
  grid.include_infinity = include_infinity;
  grid.tolerance = tolerance;
  grid.validate();
  return grid;
}

// The monotone-fraction tallies are sensitive to the scan's lower end: the
// low-rank rows only settle once the scan reaches well below q = 1, and they
// are stable against pushing the start further down or doubling the density.
QGrid default_qgrid() { return QGrid::geometric(0.05, 100.0, 120); }

bool entropic_inequalities_hold(const Spectrum& joint, const Spectrum& reduced_a,
                                const Spectrum& reduced_b, EntropyOrder q) {
  // Tsallis and Renyi conditionals always share a sign, so one form suffices.
  const EntropyParams params{q, EntropyKind::Tsallis};
  return conditional_entropy(joint, reduced_a, params) >= -kEntropySlack &&
         conditional_entropy(joint, reduced_b, params) >= -kEntropySlack;
}

bool entropic_inequalities_hold(const DensityMatrix& rho, EntropyOrder q) {
  return entropic_inequalities_hold(rho.spectrum(), rho.reduced_spectrum(Subsystem::A),
                                    rho.reduced_spectrum(Subsystem::B), q);
}

double ppt_min_eigenvalue(const DensityMatrix& rho, Subsystem transposed) {
  const RealVector eigs = eigvalsh(partial_transpose(rho.matrix(), rho.dims(), transposed));
  return eigs[eigs.size() - 1];
}

bool ppt_holds(const DensityMatrix& rho) {
  return ppt_min_eigenvalue(rho, Subsystem::B) >= -kEigNoise;
}

namespace {

bool majorized_by(const Spectrum& joint, const Spectrum& reduced) {
  // Descending partial sums of the joint never exceed those of the reduced
  // spectrum (zero-padded on the right), with eigenvalue-noise slack.
  double sum_joint = 0.0;
  double sum_reduced = 0.0;
  for (Eigen::Index k = 0; k < joint.size(); ++k) {
    sum_joint += joint[k];
    if (k < reduced.size()) sum_reduced += reduced[k];
    if (sum_joint > sum_reduced + kEigNoise) return false;
  }
  return true;
}

}  // namespace

bool majorization_holds(const Spectrum& joint, const Spectrum& reduced_a,
                        const Spectrum& reduced_b) {
  return majorized_by(joint, reduced_a) && majorized_by(joint, reduced_b);
}

bool majorization_holds(const DensityMatrix& rho) {
  return majorization_holds(rho.spectrum(), rho.reduced_spectrum(Subsystem::A),
                            rho.reduced_spectrum(Subsystem::B));
}

bool ppt_agreement(const DensityMatrix& rho, EntropyOrder q) {
  return entropic_inequalities_hold(rho, q) == ppt_holds(rho);
}

MonotonicityPair monotonicity_scan_both(const Spectrum& joint, const Spectrum& conditioning,
                                        const QGrid& grid) {
  grid.validate();
  MonotonicityPair ok{true, true};
  double prev_tsallis = std::numeric_limits<double>::infinity();
  double prev_renyi = std::numeric_limits<double>::infinity();
  for (const double q : grid.points) {
    double tsallis;
    double renyi;
    if (std::abs(q - 1.0) < kVonNeumannBranchWidth) {
      tsallis = renyi = von_neumann_entropy(joint) - von_neumann_entropy(conditioning);
    } else {
      const double log_joint = log_omega_q(joint, q);
      const double log_cond = log_omega_q(conditioning, q);
      tsallis = (1.0 - std::exp(log_joint - log_cond)) / (q - 1.0);
      renyi = (log_joint - log_cond) / (1.0 - q);
    }
    if (tsallis > prev_tsallis + grid.tolerance) ok.tsallis = false;
    if (renyi > prev_renyi + grid.tolerance) ok.renyi = false;
    prev_tsallis = tsallis;
    prev_renyi = renyi;
    if (!ok.tsallis && !ok.renyi) return ok;
  }
  if (grid.include_infinity) {
    const double log_ratio = std::log(conditioning.lambda_max() / joint.lambda_max());
    // Renyi converges to the log-ratio itself; the Tsallis limit is 0 when
    // the log-ratio is >= 0 and -infinity when it is negative.
    if (log_ratio > prev_renyi + grid.tolerance) ok.renyi = false;
    if (log_ratio >= 0.0 && 0.0 > prev_tsallis + grid.tolerance) ok.tsallis = false;
  }
  return ok;
}

bool monotonicity_scan(const Spectrum& joint, const Spectrum& conditioning, EntropyKind kind,
                       const QGrid& grid) {
  if (kind == EntropyKind::VonNeumann) {
    throw InvalidConfig("monotonicity_scan: kind must be Tsallis or Renyi");
  }
  const MonotonicityPair pair = monotonicity_scan_both(joint, conditioning, grid);
  return kind == EntropyKind::Tsallis ? pair.tsallis : pair.renyi;
}

bool monotonicity_scan(const DensityMatrix& rho, Subsystem conditioning, EntropyKind kind,
                       const QGrid& grid) {
  return monotonicity_scan(rho.spectrum(), rho.reduced_spectrum(conditioning), kind, grid);
}

CriterionVerdict evaluate_verdicts(const DensityMatrix& rho,
                                   const std::vector<EntropyOrder>& q_values, const QGrid& grid,
                                   Conditioning scan_conditioning) {
  const Spectrum reduced_a = rho.reduced_spectrum(Subsystem::A);
  const Spectrum reduced_b = rho.reduced_spectrum(Subsystem::B);
  const Spectrum& joint = rho.spectrum();

  CriterionVerdict verdict;
  verdict.entropic_positive_at.reserve(q_values.size());
  for (const EntropyOrder& q : q_values) {
    verdict.entropic_positive_at.emplace_back(
        q, entropic_inequalities_hold(joint, reduced_a, reduced_b, q));
  }
  verdict.ppt = ppt_holds(rho);
  verdict.majorization = majorization_holds(joint, reduced_a, reduced_b);

  MonotonicityPair scan{true, true};
  if (scan_conditioning == Conditioning::BGivenA || scan_conditioning == Conditioning::Both) {
    const MonotonicityPair via_a = monotonicity_scan_both(joint, reduced_a, grid);
    scan.tsallis = scan.tsallis && via_a.tsallis;
    scan.renyi = scan.renyi && via_a.renyi;
  }
  if (scan_conditioning == Conditioning::AGivenB || scan_conditioning == Conditioning::Both) {
    const MonotonicityPair via_b = monotonicity_scan_both(joint, reduced_b, grid);
    scan.tsallis = scan.tsallis && via_b.tsallis;
    scan.renyi = scan.renyi && via_b.renyi;
  }
  verdict.monotonic_tsallis = scan.tsallis;
  verdict.monotonic_renyi = scan.renyi;
  return verdict;
}

}  // namespace qvol
