#include "pseirs/csv.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "pseirs/error.hpp"

namespace pseirs::csv {

namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << "trajectory csv line " << line << ": " << what;
  throw Error(ErrorKind::ConfigError, os.str());
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(std::string_view text, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    malformed(line, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string format_number(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

void write_trajectory(std::ostream& out, const Trajectory& traj) {
  const bool sir = traj.kind() == ModelKind::Sir;
  out << (sir ? "t,S,I,R\n" : "t,S,E,I,R,N\n");
  const auto times = traj.times();
  const auto states = traj.states();
  for (std::size_t k = 0; k < states.size(); ++k) {
    const auto& x = states[k];
    out << format_number(times[k]) << ',' << format_number(x.s) << ',';
    if (!sir) out << format_number(x.e) << ',';
    out << format_number(x.i) << ',' << format_number(x.r);
    if (!sir) out << ',' << format_number(x.n());
    out << '\n';
  }
}

TrajectorySamples read_trajectory(std::istream& in) {
  TrajectorySamples samples;
  std::string line;
  if (!std::getline(in, line)) malformed(1, "missing header");
  if (line == "t,S,I,R") {
    samples.kind = ModelKind::Sir;
  } else if (line == "t,S,E,I,R,N") {
    samples.kind = ModelKind::Pseirs;
  } else {
    malformed(1, "unknown header '" + line + "'");
  }
  const std::size_t width = samples.kind == ModelKind::Sir ? 4 : 6;

  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != width) malformed(lineno, "expected " + std::to_string(width) + " fields");
    std::array<double, 6> v{};
    for (std::size_t j = 0; j < width; ++j) v[j] = parse_number(fields[j], lineno);
    samples.times.push_back(v[0]);
    if (samples.kind == ModelKind::Sir) {
      samples.states.push_back({v[1], 0.0, v[2], v[3]});
    } else {
      samples.states.push_back({v[1], v[2], v[3], v[4]});
    }
  }
  if (samples.times.size() < 2) malformed(lineno, "need at least two samples");
  if (samples.times[0] != 0.0) malformed(2, "first sample must be at t = 0");
  samples.step = samples.times[1];
  for (std::size_t k = 0; k < samples.times.size(); ++k) {
    if (samples.times[k] != static_cast<double>(k) * samples.step) {
      malformed(k + 2, "time grid is not uniform");
    }
  }
  return samples;
}

void write_phase_plane(std::ostream& out, const stats::PhasePlaneSeries& series) {
  for (std::size_t j = 0; j < series.labels.size(); ++j) {
    out << (j ? "," : "") << series.labels[j];
  }
  out << '\n';
  for (const auto& point : series.points) {
    for (std::size_t j = 0; j < point.size(); ++j) {
      out << (j ? "," : "") << format_number(point[j]);
    }
    out << '\n';
  }
}

}  // namespace pseirs::csv
