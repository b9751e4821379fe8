#include "qvol/survey.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

#include "qvol/linalg.hpp"
#include "qvol/sampling.hpp"

namespace qvol {

bool predicate_is_q_dependent(Predicate p) {
  return p == Predicate::EntropicPositive || p == Predicate::PptAgreement;
}

std::string_view predicate_name(Predicate p) {
  switch (p) {
    case Predicate::EntropicPositive: return "entropic_positive";
    case Predicate::Ppt: return "ppt";
    case Predicate::Majorization: return "majorization";
    case Predicate::PptAgreement: return "ppt_agreement";
    case Predicate::MonotonicTsallis: return "monotonic_tsallis";
    case Predicate::MonotonicRenyi: return "monotonic_renyi";
  }
  return "unknown";
}

std::optional<Predicate> predicate_from_name(std::string_view name) {
  for (const Predicate p :
       {Predicate::EntropicPositive, Predicate::Ppt, Predicate::Majorization,
        Predicate::PptAgreement, Predicate::MonotonicTsallis, Predicate::MonotonicRenyi}) {
    if (predicate_name(p) == name) return p;
  }
  return std::nullopt;
}

void SurveyConfig::validate() const {
  if (samples < 1) throw InvalidConfig("SurveyConfig: samples must be >= 1");
  if (predicates.empty()) throw InvalidConfig("SurveyConfig: no predicates requested");
  if (rank < 1 || rank > dims.n()) {
    throw InvalidConfig("SurveyConfig: rank " + std::to_string(rank) + " outside [1, " +
                        std::to_string(dims.n()) + "]");
  }
  for (const EntropyOrder& q : q_list) {
    if (!q.is_infinite() && q.value() < 1.0) {
      throw InvalidConfig("SurveyConfig: q values below 1 are not surveyed");
    }
  }
  const bool needs_q =
      std::any_of(predicates.begin(), predicates.end(), predicate_is_q_dependent);
  if (needs_q && q_list.empty()) {
    throw InvalidConfig("SurveyConfig: q-dependent predicate requested with empty q list");
  }
  grid.validate();
}

namespace {

struct Cell {
  Predicate predicate;
  std::optional<EntropyOrder> q;
  std::size_t q_index = 0;  // position in config.q_list for q-dependent cells
};

std::vector<Cell> layout_cells(const SurveyConfig& config) {
  std::vector<Cell> cells;
  for (const Predicate p : config.predicates) {
    if (predicate_is_q_dependent(p)) {
      for (std::size_t i = 0; i < config.q_list.size(); ++i) {
        cells.push_back({p, config.q_list[i], i});
      }
    } else {
      cells.push_back({p, std::nullopt, 0});
    }
  }
  return cells;
}

struct SampleFlags {
  bool reduced = false;   // any predicate consuming reduced spectra
  bool entropic = false;  // any predicate consuming per-q entropic positivity
  bool pt = false;        // any predicate consuming the partial transpose
  bool scan = false;      // any monotonicity predicate
};

SampleFlags needed_work(const SurveyConfig& config) {
  SampleFlags flags;
  for (const Predicate p : config.predicates) {
    switch (p) {
      case Predicate::EntropicPositive: flags.reduced = flags.entropic = true; break;
      case Predicate::Majorization: flags.reduced = true; break;
      case Predicate::PptAgreement: flags.reduced = flags.entropic = flags.pt = true; break;
      case Predicate::Ppt: flags.pt = true; break;
      case Predicate::MonotonicTsallis:
      case Predicate::MonotonicRenyi: flags.reduced = flags.scan = true; break;
    }
  }
  return flags;
}

/// Tally of one worker over its contiguous index range.
void tally_range(const SurveyConfig& config, const std::vector<Cell>& cells, SampleFlags flags,
                 std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& hits) {
  for (std::uint64_t index = begin; index < end; ++index) {
    const DensityMatrix rho = sample_state({config.dims, config.rank, config.seed, index});
    const Spectrum& joint = rho.spectrum();

    std::optional<Spectrum> reduced_a;
    std::optional<Spectrum> reduced_b;
    if (flags.reduced) {
      reduced_a = rho.reduced_spectrum(Subsystem::A);
      reduced_b = rho.reduced_spectrum(Subsystem::B);
    }
    bool ppt_ok = false;
    if (flags.pt) ppt_ok = ppt_holds(rho);

    // Entropic positivity shared between EntropicPositive and PptAgreement.
    std::vector<bool> entropic_ok;
    if (flags.entropic) {
      entropic_ok.reserve(config.q_list.size());
      for (const EntropyOrder& q : config.q_list) {
        entropic_ok.push_back(entropic_inequalities_hold(joint, *reduced_a, *reduced_b, q));
      }
    }

    MonotonicityPair scan{true, true};
    if (flags.scan) {
      if (config.scan_conditioning == Conditioning::BGivenA ||
          config.scan_conditioning == Conditioning::Both) {
        const MonotonicityPair p = monotonicity_scan_both(joint, *reduced_a, config.grid);
        scan.tsallis = scan.tsallis && p.tsallis;
        scan.renyi = scan.renyi && p.renyi;
      }
      if (config.scan_conditioning == Conditioning::AGivenB ||
          config.scan_conditioning == Conditioning::Both) {
        const MonotonicityPair p = monotonicity_scan_both(joint, *reduced_b, config.grid);
        scan.tsallis = scan.tsallis && p.tsallis;
        scan.renyi = scan.renyi && p.renyi;
      }
    }

    for (std::size_t c = 0; c < cells.size(); ++c) {
      bool hit = false;
      switch (cells[c].predicate) {
        case Predicate::EntropicPositive: hit = entropic_ok[cells[c].q_index]; break;
        case Predicate::PptAgreement: hit = entropic_ok[cells[c].q_index] == ppt_ok; break;
        case Predicate::Ppt: hit = ppt_ok; break;
        case Predicate::Majorization:
          hit = majorization_holds(joint, *reduced_a, *reduced_b);
          break;
        case Predicate::MonotonicTsallis: hit = scan.tsallis; break;
        case Predicate::MonotonicRenyi: hit = scan.renyi; break;
      }
      if (hit) ++hits[c];
    }
  }
}

}  // namespace

VolumeEstimate aggregate(Predicate predicate, std::optional<EntropyOrder> q,
                         std::vector<Tally> partials) {
  std::sort(partials.begin(), partials.end(),
            [](const Tally& a, const Tally& b) { return a.first_index < b.first_index; });
  VolumeEstimate estimate;
  estimate.predicate = predicate;
  estimate.q = q;
  std::uint64_t cursor = 0;
  bool first = true;
  for (const Tally& t : partials) {
    if (!first && t.first_index < cursor) {
      throw OverlappingRanges("aggregate: tally starting at " + std::to_string(t.first_index) +
                              " overlaps the range ending at " + std::to_string(cursor));
    }
    cursor = t.first_index + t.count;
    first = false;
    estimate.hits += t.hits;
    estimate.samples += t.count;
  }
  if (estimate.samples == 0) throw InvalidConfig("aggregate: no samples");
  estimate.fraction =
      static_cast<double>(estimate.hits) / static_cast<double>(estimate.samples);
  if (estimate.hits == 0 || estimate.hits == estimate.samples) {
    // one-sided rule-of-three bound instead of a degenerate zero
    estimate.std_error = 3.0 / static_cast<double>(estimate.samples);
  } else {
    estimate.std_error = std::sqrt(estimate.fraction * (1.0 - estimate.fraction) /
                                   static_cast<double>(estimate.samples));
  }
  return estimate;
}

std::vector<VolumeEstimate> run_survey(const SurveyConfig& config) {
  config.validate();
  const std::vector<Cell> cells = layout_cells(config);
  const SampleFlags flags = needed_work(config);

  unsigned workers = config.workers != 0 ? config.workers : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, config.samples));

  // Contiguous index ranges per worker; merged in range order afterwards.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  const std::uint64_t chunk = config.samples / workers;
  const std::uint64_t remainder = config.samples % workers;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t size = chunk + (w < remainder ? 1 : 0);
    ranges.emplace_back(begin, begin + size);
    begin += size;
  }

  std::vector<std::vector<std::uint64_t>> worker_hits(
      ranges.size(), std::vector<std::uint64_t>(cells.size(), 0));
  std::mutex error_mutex;
  std::optional<std::uint64_t> error_index;
  std::string error_message;

  auto body = [&](std::size_t w) {
    try {
      tally_range(config, cells, flags, ranges[w].first, ranges[w].second, worker_hits[w]);
    } catch (const std::exception& e) {
      // attach the failing range start; the lowest range wins for determinism
      const std::scoped_lock lock(error_mutex);
      if (!error_index || ranges[w].first < *error_index) {
        error_index = ranges[w].first;
        error_message = e.what();
      }
    }
  };

  if (ranges.size() == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (std::size_t w = 0; w < ranges.size(); ++w) pool.emplace_back(body, w);
    for (std::thread& t : pool) t.join();
  }
  if (error_index) {
    throw Error("survey failed in sample range starting at index " +
                std::to_string(*error_index) + ": " + error_message);
  }

  std::vector<VolumeEstimate> estimates;
  estimates.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::vector<Tally> partials;
    partials.reserve(ranges.size());
    for (std::size_t w = 0; w < ranges.size(); ++w) {
      partials.push_back({ranges[w].first, ranges[w].second - ranges[w].first, worker_hits[w][c]});
    }
    estimates.push_back(aggregate(cells[c].predicate, cells[c].q, std::move(partials)));
  }
  return estimates;
}

namespace {

std::vector<EntropyOrder> standard_q_list() {
  return {EntropyOrder::finite(2), EntropyOrder::finite(4), EntropyOrder::finite(8),
          EntropyOrder::finite(16), EntropyOrder::infinity()};
}

/// q values uniform in 1/q over [0.05, 0.5] (q from 2 to 20), plus infinity.
std::vector<EntropyOrder> inverse_q_sweep() {
  std::vector<EntropyOrder> qs;
  for (int k = 10; k >= 1; --k) {
    qs.push_back(EntropyOrder::finite(20.0 / k));
  }
  qs.push_back(EntropyOrder::infinity());
  return qs;
}

void apply_overrides(SurveyConfig& config, const PresetOverrides& overrides) {
  if (overrides.samples) config.samples = *overrides.samples;
  if (overrides.seed) config.seed = *overrides.seed;
  if (overrides.workers) config.workers = *overrides.workers;
}

}  // namespace

std::vector<PresetEntry> preset(std::string_view name, const PresetOverrides& overrides) {
  std::vector<PresetEntry> entries;
  auto add = [&](SurveyConfig config) {
    apply_overrides(config, overrides);
    entries.push_back({std::string(name), std::move(config)});
  };

  if (name == "table1") {
    auto row = [&](int n1, int n2, int rank) {
      SurveyConfig config;
      config.dims = {n1, n2};
      config.rank = rank;
      config.predicates = {Predicate::MonotonicTsallis, Predicate::MonotonicRenyi};
      add(std::move(config));
    };
    for (const int rank : {4, 3, 2}) row(2, 2, rank);
    for (const int rank : {6, 5, 4, 3, 2}) row(2, 3, rank);
  } else if (name == "positivity_vs_dim" || name == "positivity_vs_q" ||
             name == "majorization_volumes") {
    auto sweep = [&](int n1, int n2) {
      SurveyConfig config;
      config.dims = {n1, n2};
      config.rank = config.dims.n();
      if (name == "positivity_vs_dim") {
        config.q_list = standard_q_list();
        config.predicates = {Predicate::EntropicPositive};
      } else if (name == "positivity_vs_q") {
        config.q_list = inverse_q_sweep();
        config.predicates = {Predicate::EntropicPositive};
      } else {
        config.q_list = {EntropyOrder::infinity()};
        config.predicates = {Predicate::Majorization, Predicate::EntropicPositive};
      }
      add(std::move(config));
    };
    const int hi2 = name == "positivity_vs_q" ? 6 : 10;
    const int hi3 = name == "positivity_vs_q" ? 5 : 7;
    for (int n2 = 2; n2 <= hi2; ++n2) sweep(2, n2);
    for (int n2 = 3; n2 <= hi3; ++n2) sweep(3, n2);
  } else if (name == "ppt_agreement") {
    for (const int d : {3, 4}) {
      SurveyConfig config;
      config.dims = {d, d};
      config.rank = config.dims.n();
      config.q_list = inverse_q_sweep();
      config.predicates = {Predicate::PptAgreement};
      add(std::move(config));
    }
  } else {
    throw UnknownPreset("preset: unknown name '" + std::string(name) + "'");
  }
  return entries;
}

}  // namespace qvol
