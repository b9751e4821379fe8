#pragma once

#include <vector>

#include "qvol/entropy.hpp"
#include "qvol/state.hpp"

namespace qvol {

/// Ascending positive q values with an optional q = infinity terminal,
/// plus the slack allowed when testing a trace for monotone decrease.
struct QGrid {
  std::vector<double> points;
  bool include_infinity = true;
  double tolerance = 1e-10;

  void validate() const;

  /// `count` points geometrically spaced over [lo, hi].
  static QGrid geometric(double lo, double hi, int count, bool include_infinity = true,
                         double tolerance = 1e-10);
};

/// Grid used for the monotonicity tallies: 120 geometric points in
/// [0.05, 100] anchored by the infinity terminal.
QGrid default_qgrid();

/// Which conditional(s) a monotonicity scan inspects.
enum class Conditioning { BGivenA, AGivenB, Both };

/// Classical q-entropic inequalities: both conditional q-entropies >= 0
/// (within slack). Kind-independent, so evaluated once via the Tsallis form.
bool entropic_inequalities_hold(const Spectrum& joint, const Spectrum& reduced_a,
                                const Spectrum& reduced_b, EntropyOrder q);
bool entropic_inequalities_hold(const DensityMatrix& rho, EntropyOrder q);

/// Smallest eigenvalue of the partial transpose.
double ppt_min_eigenvalue(const DensityMatrix& rho, Subsystem transposed = Subsystem::B);

/// Positive-partial-transpose test; independent of the transposed subsystem.
bool ppt_holds(const DensityMatrix& rho);

/// Majorization criterion: the joint spectrum is majorized by each reduced
/// spectrum (descending partial sums dominated, reduced side zero-padded).
bool majorization_holds(const Spectrum& joint, const Spectrum& reduced_a,
                        const Spectrum& reduced_b);
bool majorization_holds(const DensityMatrix& rho);

/// Do the entropic inequalities and the PPT test give the same answer?
bool ppt_agreement(const DensityMatrix& rho, EntropyOrder q);

/// Non-increasing verdicts for both entropy families sharing one omega sweep.
struct MonotonicityPair {
  bool tsallis;
  bool renyi;
};

/// Scan the conditional entropy of (joint | conditioning) along the grid and
/// report whether each family's trace is non-increasing. The infinity
/// terminal contributes each family's own q -> infinity limit, driven by the
/// lambda_max log-ratio.
MonotonicityPair monotonicity_scan_both(const Spectrum& joint, const Spectrum& conditioning,
                                        const QGrid& grid);

bool monotonicity_scan(const Spectrum& joint, const Spectrum& conditioning, EntropyKind kind,
                       const QGrid& grid);
bool monotonicity_scan(const DensityMatrix& rho, Subsystem conditioning, EntropyKind kind,
                       const QGrid& grid);

/// All per-state outcomes in one bundle.
struct CriterionVerdict {
  std::vector<std::pair<EntropyOrder, bool>> entropic_positive_at;
  bool ppt = false;
  bool majorization = false;
  bool monotonic_tsallis = false;
  bool monotonic_renyi = false;
};

CriterionVerdict evaluate_verdicts(const DensityMatrix& rho,
                                   const std::vector<EntropyOrder>& q_values, const QGrid& grid,
                                   Conditioning scan_conditioning = Conditioning::BGivenA);

}  // namespace qvol
