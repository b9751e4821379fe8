#include "qvol/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qvol {

namespace {

std::string format_double_17g(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

double parse_double(std::string_view text, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(std::string("parse error: bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(std::string("parse error: bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace

std::string format_q(const std::optional<EntropyOrder>& q) {
  if (!q) return "";
  if (q->is_infinite()) return "inf";
  return format_double_17g(q->value());
}

std::optional<EntropyOrder> parse_q(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text == "inf") return EntropyOrder::infinity();
  return EntropyOrder::finite(parse_double(text, "q value"));
}

std::string format_real(double value) { return format_double_17g(value); }

void write_csv(std::ostream& out, std::span<const ResultRow> rows) {
  out << kCsvHeader << '\n';
  for (const ResultRow& row : rows) {
    out << row.experiment << ',' << row.dims.n1 << ',' << row.dims.n2 << ',' << row.rank << ','
        << format_q(row.estimate.q) << ',' << predicate_name(row.estimate.predicate) << ','
        << row.estimate.hits << ',' << row.estimate.samples << ','
        << format_real(row.estimate.fraction) << ',' << format_real(row.estimate.std_error)
        << '\n';
  }
}

std::vector<ResultRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error("read_csv: missing or unexpected header");
  }
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 10) {
      throw Error("read_csv: expected 10 fields, got " + std::to_string(fields.size()));
    }
    ResultRow row;
    row.experiment = std::string(fields[0]);
    row.dims = {static_cast<int>(parse_u64(fields[1], "n1")),
                static_cast<int>(parse_u64(fields[2], "n2"))};
    row.rank = static_cast<int>(parse_u64(fields[3], "rank"));
    row.estimate.q = parse_q(fields[4]);
    const auto predicate = predicate_from_name(fields[5]);
    if (!predicate) {
      throw Error("read_csv: unknown predicate '" + std::string(fields[5]) + "'");
    }
    row.estimate.predicate = *predicate;
    row.estimate.hits = parse_u64(fields[6], "hits");
    row.estimate.samples = parse_u64(fields[7], "samples");
    row.estimate.fraction = parse_double(fields[8], "fraction");
    row.estimate.std_error = parse_double(fields[9], "stderr");
    rows.push_back(std::move(row));
  }
  return rows;
}

void save_matrix(std::ostream& out, const Matrix& m, const BipartiteDims& dims) {
  detail::check_bipartite(m.rows(), m.cols(), dims, "save_matrix");
  out << "dims " << dims.n1 << ' ' << dims.n2 << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out << i << ' ' << j << ' ' << format_real(m(i, j).real()) << ' '
          << format_real(m(i, j).imag()) << '\n';
    }
  }
}

std::pair<Matrix, BipartiteDims> load_matrix(std::istream& in) {
  std::string line;
  std::string tag;
  int n1 = 0;
  int n2 = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream header(line);
    if (!(header >> tag >> n1 >> n2) || tag != "dims") {
      throw Error("load_matrix: first line must be 'dims N1 N2'");
    }
    break;
  }
  if (tag != "dims") throw Error("load_matrix: empty file");
  BipartiteDims dims(n1, n2);
  Matrix m = Matrix::Zero(dims.n(), dims.n());
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream entry(line);
    int row = 0;
    int col = 0;
    double re = 0.0;
    double im = 0.0;
    if (!(entry >> row >> col >> re >> im)) {
      throw Error("load_matrix: bad entry line '" + line + "'");
    }
    if (row < 0 || row >= dims.n() || col < 0 || col >= dims.n()) {
      throw Error("load_matrix: index (" + std::to_string(row) + ", " + std::to_string(col) +
                  ") outside " + std::to_string(dims.n()) + "x" + std::to_string(dims.n()));
    }
    m(row, col) = Complex(re, im);
  }
  return {std::move(m), dims};
}

DensityMatrix load_density_matrix(std::istream& in) {
  auto [m, dims] = load_matrix(in);
  const double herr = hermiticity_error(m);
  if (herr > 1e-8) {
    throw InvalidState("matrix file: Hermiticity defect " + std::to_string(herr) +
                       " exceeds 1e-8");
  }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > 1e-8) {
    throw InvalidState("matrix file: trace " + std::to_string(tr) + " differs from 1 beyond 1e-8");
  }
  Matrix canonical = (0.5 / tr) * (m + m.adjoint());
  const RealVector eigs = eigvalsh(canonical);
  if (eigs[eigs.size() - 1] < -kEigNoise) {
    throw InvalidState("matrix file: eigenvalue " + std::to_string(eigs[eigs.size() - 1]) +
                       " below -1e-10; not a state");
  }
  return DensityMatrix(dims, std::move(canonical));
}

DensityMatrix load_density_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file: " + path.string());
  return load_density_matrix(in);
}

std::string manifest_to_json(const RunManifest& manifest) {
  nlohmann::json j;
  j["command_line"] = manifest.command_line;
  j["args"] = manifest.args;
  j["version"] = manifest.version;
  j["seed"] = manifest.seed;
  j["total_samples"] = manifest.total_samples;
  j["duration_seconds"] = manifest.duration_seconds;
  j["output_path"] = manifest.output_path;
  return j.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  RunManifest manifest;
  manifest.command_line = j.at("command_line").get<std::string>();
  manifest.args = j.at("args").get<std::vector<std::string>>();
  manifest.version = j.at("version").get<std::string>();
  manifest.seed = j.at("seed").get<std::uint64_t>();
  manifest.total_samples = j.at("total_samples").get<std::uint64_t>();
  manifest.duration_seconds = j.at("duration_seconds").get<double>();
  manifest.output_path = j.at("output_path").get<std::string>();
  return manifest;
}

}  // namespace qvol
