#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qvol/criteria.hpp"
#include "qvol/entropy.hpp"
#include "qvol/types.hpp"

namespace qvol {

enum class Predicate {
  EntropicPositive,  // per q
  Ppt,
  Majorization,
  PptAgreement,  // per q
  MonotonicTsallis,
  MonotonicRenyi,
};

bool predicate_is_q_dependent(Predicate p);
std::string_view predicate_name(Predicate p);
std::optional<Predicate> predicate_from_name(std::string_view name);

/// One Monte Carlo sweep: sample `samples` states of the given dimensions and
/// rank and tally every requested predicate, per q where applicable.
struct SurveyConfig {
  BipartiteDims dims;
  int rank = 4;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::vector<EntropyOrder> q_list;
  std::vector<Predicate> predicates;
  unsigned workers = 0;  // 0 = hardware concurrency
  QGrid grid = default_qgrid();
  Conditioning scan_conditioning = Conditioning::BGivenA;

  void validate() const;
};

/// Monte Carlo tally for one (predicate, q) cell.
struct VolumeEstimate {
  Predicate predicate;
  std::optional<EntropyOrder> q;  // empty for q-independent predicates
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double fraction = 0.0;
  double std_error = 0.0;  // sqrt(f(1-f)/n); rule-of-three 3/n at f in {0, 1}
};

/// Partial tally over the contiguous sample-index range
/// [first_index, first_index + count).
struct Tally {
  std::uint64_t first_index = 0;
  std::uint64_t count = 0;
  std::uint64_t hits = 0;
};

/// Merge partial tallies from disjoint index ranges of one configuration.
/// Exact integer sums, so the result is identical to a single-threaded run.
VolumeEstimate aggregate(Predicate predicate, std::optional<EntropyOrder> q,
                         std::vector<Tally> partials);

/// Run a survey. One estimate per (predicate, q) cell, in configuration
/// order; deterministic for a fixed seed regardless of the worker count.
std::vector<VolumeEstimate> run_survey(const SurveyConfig& config);

struct PresetOverrides {
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
};

struct PresetEntry {
  std::string experiment;
  SurveyConfig config;
};

/// Materialize a named experiment sweep:
///   table1               monotonicity fractions: 2x2 ranks 4..2, 2x3 ranks 6..2
///   positivity_vs_dim    entropic positivity, q in {2,4,8,16,inf}, 2xN2 and 3xN2
///   positivity_vs_q      entropic positivity on a dense 1/q-uniform sweep
///   ppt_agreement        entropic/PPT agreement for 3x3 and 4x4, q in [2,20] + inf
///   majorization_volumes majorization vs q=inf positivity, 2xN2 and 3xN2
std::vector<PresetEntry> preset(std::string_view name, const PresetOverrides& overrides = {});

}  // namespace qvol
