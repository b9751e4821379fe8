#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qvol/entropy.hpp"
#include "qvol/state.hpp"
#include "qvol/survey.hpp"

namespace qvol {

/// Serialize q as a decimal (17 significant digits) or the literal "inf";
/// an absent q becomes the empty string.
std::string format_q(const std::optional<EntropyOrder>& q);
std::optional<EntropyOrder> parse_q(std::string_view text);

/// Round-trip-exact formatting for fractions and standard errors.
std::string format_real(double value);

/// One CSV record: a volume estimate plus the configuration that produced it.
struct ResultRow {
  std::string experiment;
  BipartiteDims dims;
  int rank = 0;
  VolumeEstimate estimate;
};

inline constexpr std::string_view kCsvHeader =
    "experiment,n1,n2,rank,q,predicate,hits,samples,fraction,stderr";

void write_csv(std::ostream& out, std::span<const ResultRow> rows);
std::vector<ResultRow> read_csv(std::istream& in);

/// Plain-text matrix format: line 1 "dims N1 N2", then one line
/// "row col real imag" per (not necessarily every) entry, 0-based indices.
void save_matrix(std::ostream& out, const Matrix& m, const BipartiteDims& dims);
std::pair<Matrix, BipartiteDims> load_matrix(std::istream& in);

/// Load and validate a density matrix file. Checks Hermiticity and unit
/// trace within 1e-8 and eigenvalue positivity within the 1e-10 noise band,
/// then canonicalizes (symmetrize, renormalize) before constructing.
DensityMatrix load_density_matrix(std::istream& in);
DensityMatrix load_density_matrix(const std::filesystem::path& path);

/// Everything needed to reproduce a result file: the survey subcommand's
/// argument vector plus bookkeeping. Re-running `qvol survey` with the stored
/// arguments regenerates the CSV byte-for-byte (the duration field aside).
struct RunManifest {
  std::string command_line;
  std::vector<std::string> args;
  std::string version;
  std::uint64_t seed = 0;
  std::uint64_t total_samples = 0;
  double duration_seconds = 0.0;
  std::string output_path;
};

std::string manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const std::string& text);

}  // namespace qvol
