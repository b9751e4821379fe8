// qvol: Monte Carlo surveys of conditional q-entropies, PPT, and
// majorization over random bipartite quantum states.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qvol/criteria.hpp"
#include "qvol/entropy.hpp"
#include "qvol/io.hpp"
#include "qvol/sampling.hpp"
#include "qvol/survey.hpp"
#include "qvol/version.hpp"

namespace {

using namespace qvol;

BipartiteDims parse_dims(const std::string& text) {
  const std::size_t x = text.find('x');
  if (x == std::string::npos) {
    throw CLI::ValidationError("--dims", "expected N1xN2, e.g. 2x3");
  }
  try {
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--dims", e.what());
  }
}

std::vector<EntropyOrder> parse_q_list(const std::string& text) {
  std::vector<EntropyOrder> qs;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item == "inf") {
      qs.push_back(EntropyOrder::infinity());
    } else {
      const double q = std::stod(item);
      if (q < 1.0) throw CLI::ValidationError("--q", "q values must be >= 1 (or 'inf')");
      qs.push_back(EntropyOrder::finite(q));
    }
  }
  if (qs.empty()) throw CLI::ValidationError("--q", "empty q list");
  return qs;
}

std::vector<Predicate> parse_predicates(const std::string& text) {
  std::vector<Predicate> predicates;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto p = predicate_from_name(item);
    if (!p) throw CLI::ValidationError("--predicates", "unknown predicate '" + item + "'");
    predicates.push_back(*p);
  }
  if (predicates.empty()) throw CLI::ValidationError("--predicates", "empty predicate list");
  return predicates;
}

// "lo:hi:count" -> geometric grid over [lo, hi]; the infinity terminal is
// always appended.
QGrid parse_qgrid(const std::string& text) {
  std::stringstream stream(text);
  std::string lo, hi, count;
  if (!std::getline(stream, lo, ':') || !std::getline(stream, hi, ':') ||
      !std::getline(stream, count)) {
    throw CLI::ValidationError("--q-grid", "expected LO:HI:COUNT, e.g. 0.05:100:120");
  }
  try {
    return QGrid::geometric(std::stod(lo), std::stod(hi), std::stoi(count));
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--q-grid", e.what());
  }
}

Conditioning parse_conditioning(const std::string& text) {
  if (text == "b_given_a") return Conditioning::BGivenA;
  if (text == "a_given_b") return Conditioning::AGivenB;
  if (text == "both") return Conditioning::Both;
  throw CLI::ValidationError("--conditioning", "expected b_given_a, a_given_b or both");
}

unsigned workers_from_env() {
  if (const char* env = std::getenv("QVOL_WORKERS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<unsigned>(value);
  }
  return 0;  // auto
}

struct SurveyArgs {
  std::string preset_name;
  std::string dims = "2x2";
  int rank = -1;
  std::string q_text = "2,4,8,16,inf";
  std::string predicates_text = "entropic_positive";
  std::string qgrid_text;
  std::string conditioning_text = "b_given_a";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  std::string out_path;
};

int run_survey_command(const SurveyArgs& args, const std::vector<std::string>& raw_args) {
  const auto started = std::chrono::steady_clock::now();

  std::vector<PresetEntry> entries;
  if (!args.preset_name.empty()) {
    PresetOverrides overrides;
    overrides.samples = args.samples;
    overrides.seed = args.seed;
    overrides.workers = args.workers != 0 ? args.workers : workers_from_env();
    entries = preset(args.preset_name, overrides);
  } else {
    SurveyConfig config;
    config.dims = parse_dims(args.dims);
    config.rank = args.rank > 0 ? args.rank : config.dims.n();
    config.samples = args.samples;
    config.seed = args.seed;
    config.q_list = parse_q_list(args.q_text);
    config.predicates = parse_predicates(args.predicates_text);
    config.workers = args.workers != 0 ? args.workers : workers_from_env();
    if (!args.qgrid_text.empty()) config.grid = parse_qgrid(args.qgrid_text);
    config.scan_conditioning = parse_conditioning(args.conditioning_text);
    entries.push_back({"custom", std::move(config)});
  }

  std::vector<ResultRow> rows;
  std::uint64_t total_samples = 0;
  for (const PresetEntry& entry : entries) {
    const std::vector<VolumeEstimate> estimates = run_survey(entry.config);
    total_samples += entry.config.samples;
    for (const VolumeEstimate& estimate : estimates) {
      rows.push_back({entry.experiment, entry.config.dims, entry.config.rank, estimate});
    }
  }

  if (args.out_path.empty()) {
    write_csv(std::cout, rows);
  } else {
    std::ofstream out(args.out_path);
    if (!out) {
      std::cerr << "qvol: cannot open output file " << args.out_path << "\n";
      return 1;
    }
    write_csv(out, rows);

    RunManifest manifest;
    manifest.args = raw_args;
    std::ostringstream cmd;
    cmd << "qvol";
    for (const std::string& a : raw_args) cmd << ' ' << a;
    manifest.command_line = cmd.str();
    manifest.version = std::string(kVersion);
    manifest.seed = args.seed;
    manifest.total_samples = total_samples;
    manifest.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    manifest.output_path = args.out_path;
    std::ofstream mout(args.out_path + ".manifest.json");
    mout << manifest_to_json(manifest);
  }
  return 0;
}

struct StateArgs {
  std::string load_path;
  std::string sample_spec;
  std::string qgrid_text = "0.05:100:120";
  std::string kind_text = "tsallis";
  bool trace_q = false;
};

// "N1xN2/RANK/SEED" -> a reproducible sampled state (index 0).
DensityMatrix state_from_spec(const std::string& text) {
  std::stringstream stream(text);
  std::string dims_text, rank_text, seed_text;
  if (!std::getline(stream, dims_text, '/') || !std::getline(stream, rank_text, '/') ||
      !std::getline(stream, seed_text)) {
    throw CLI::ValidationError("--sample", "expected N1xN2/RANK/SEED, e.g. 2x2/4/7");
  }
  SampleSpec spec;
  spec.dims = parse_dims(dims_text);
  try {
    spec.rank = std::stoi(rank_text);
    spec.seed = std::stoull(seed_text);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--sample", "expected N1xN2/RANK/SEED, e.g. 2x2/4/7");
  }
  spec.sample_index = 0;
  return sample_state(spec);
}

void print_spectrum(const char* label, const Spectrum& s) {
  std::cout << label;
  for (Eigen::Index i = 0; i < s.size(); ++i) std::cout << ' ' << format_real(s[i]);
  std::cout << '\n';
}

int run_state_command(const StateArgs& args) {
  const DensityMatrix rho =
      !args.load_path.empty() ? load_density_matrix(args.load_path)
                              : state_from_spec(args.sample_spec);
  const QGrid grid = parse_qgrid(args.qgrid_text);
  const EntropyKind kind = args.kind_text == "renyi" ? EntropyKind::Renyi : EntropyKind::Tsallis;

  const Spectrum reduced_a = rho.reduced_spectrum(Subsystem::A);
  const Spectrum reduced_b = rho.reduced_spectrum(Subsystem::B);

  std::cout << "dims: " << rho.dims().n1 << "x" << rho.dims().n2 << "\n";
  std::cout << "rank: " << rho.spectrum().rank() << "\n";
  print_spectrum("spectrum:", rho.spectrum());
  print_spectrum("spectrum_A:", reduced_a);
  print_spectrum("spectrum_B:", reduced_b);

  const std::vector<EntropyOrder> q_report = {
      EntropyOrder::finite(2), EntropyOrder::finite(4), EntropyOrder::finite(8),
      EntropyOrder::finite(16), EntropyOrder::infinity()};
  const CriterionVerdict verdict = evaluate_verdicts(rho, q_report, grid);
  for (const auto& [q, positive] : verdict.entropic_positive_at) {
    std::cout << "entropic_positive q=" << format_q(q) << ": " << (positive ? "yes" : "no")
              << "\n";
  }
  std::cout << "ppt: " << (verdict.ppt ? "yes" : "no")
            << " (min PT eigenvalue " << format_real(ppt_min_eigenvalue(rho)) << ")\n";
  std::cout << "majorization: " << (verdict.majorization ? "yes" : "no") << "\n";
  std::cout << "monotonic_tsallis: " << (verdict.monotonic_tsallis ? "yes" : "no") << "\n";
  std::cout << "monotonic_renyi: " << (verdict.monotonic_renyi ? "yes" : "no") << "\n";

  if (args.trace_q) {
    std::cout << "# q S(B|A) S(A|B)\n";
    for (const double q : grid.points) {
      const EntropyParams params{EntropyOrder::finite(q), kind};
      std::cout << format_real(q) << ' '
                << format_real(conditional_entropy(rho.spectrum(), reduced_a, params)) << ' '
                << format_real(conditional_entropy(rho.spectrum(), reduced_b, params)) << '\n';
    }
    if (grid.include_infinity) {
      const EntropyParams params{EntropyOrder::infinity(), kind};
      std::cout << "inf "
                << format_real(conditional_entropy(rho.spectrum(), reduced_a, params)) << ' '
                << format_real(conditional_entropy(rho.spectrum(), reduced_b, params)) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo state-space surveys of conditional q-entropies "
               "and separability criteria for bipartite quantum states"};
  app.set_version_flag("--version", std::string(qvol::kVersion));
  app.require_subcommand(1);

  SurveyArgs survey_args;
  CLI::App* survey_cmd =
      app.add_subcommand("survey", "Tally predicate volumes over random states");
  survey_cmd->add_option("--preset", survey_args.preset_name,
                         "Named sweep: table1, positivity_vs_dim, positivity_vs_q, "
                         "ppt_agreement, majorization_volumes");
  survey_cmd->add_option("--dims", survey_args.dims, "Bipartite dimensions N1xN2");
  survey_cmd->add_option("--rank", survey_args.rank, "State rank (default: full)");
  survey_cmd->add_option("--q", survey_args.q_text, "Comma-separated q values (decimal or inf)");
  survey_cmd->add_option("--predicates", survey_args.predicates_text,
                         "Comma-separated: entropic_positive, ppt, majorization, "
                         "ppt_agreement, monotonic_tsallis, monotonic_renyi");
  survey_cmd->add_option("--q-grid", survey_args.qgrid_text,
                         "Monotonicity grid LO:HI:COUNT (default 0.05:100:120)");
  survey_cmd->add_option("--conditioning", survey_args.conditioning_text,
                         "Monotonicity conditioning: b_given_a, a_given_b, both");
  survey_cmd->add_option("--samples", survey_args.samples, "Samples per configuration");
  survey_cmd->add_option("--seed", survey_args.seed, "Base RNG seed");
  survey_cmd->add_option("--workers", survey_args.workers,
                         "Worker threads (default: QVOL_WORKERS or hardware)");
  survey_cmd->add_option("--out", survey_args.out_path,
                         "CSV output path (stdout if omitted); a .manifest.json "
                         "is written alongside");

  StateArgs state_args;
  CLI::App* state_cmd = app.add_subcommand("state", "Diagnose a single state");
  CLI::Option* load_opt = state_cmd->add_option("--load", state_args.load_path,
                                                "Matrix file ('dims N1 N2' + entry lines)");
  state_cmd->add_option("--sample", state_args.sample_spec, "Sampled state N1xN2/RANK/SEED")
      ->excludes(load_opt);
  state_cmd->add_option("--q-grid", state_args.qgrid_text, "Grid LO:HI:COUNT");
  state_cmd->add_option("--kind", state_args.kind_text, "Trace family: tsallis or renyi");
  state_cmd->add_flag("--trace-q", state_args.trace_q,
                      "Emit the q -> conditional-entropy table for plotting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (survey_cmd->parsed()) {
      if (survey_args.preset_name.empty() && survey_cmd->count("--dims") == 0) {
        std::cerr << "qvol survey: need --preset or --dims (see --help)\n";
        return 2;
      }
      std::vector<std::string> raw_args(argv + 1, argv + argc);
      return run_survey_command(survey_args, raw_args);
    }
    if (state_cmd->parsed()) {
      if (state_args.load_path.empty() && state_args.sample_spec.empty()) {
        std::cerr << "qvol state: need --load or --sample (see --help)\n";
        return 2;
      }
      return run_state_command(state_args);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "qvol: " << e.what() << "\n";
    return 2;
  } catch (const qvol::UnknownPreset& e) {
    std::cerr << "qvol: " << e.what() << "\n";
    return 2;
  } catch (const qvol::Error& e) {
    std::cerr << "qvol: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qvol: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
