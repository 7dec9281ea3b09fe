#include "pseirs/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pseirs/error.hpp"

namespace pseirs::stats {

namespace {

std::vector<Compartment> compartments_of(const Trajectory& traj) {
  if (traj.kind() == ModelKind::Sir) return {Compartment::S, Compartment::I, Compartment::R};
  return {Compartment::S, Compartment::E, Compartment::I, Compartment::R};
}

[[noreturn]] void empty_window(const Window& w) {
  std::ostringstream os;
  os << "no samples in window [" << w.from << ", " << w.to << "]";
  throw Error(ErrorKind::EmptyWindow, os.str());
}

}  // namespace

Window full_window(const Trajectory& traj) noexcept { return {0.0, traj.horizon()}; }

const CompartmentSummary& StatsTable::row(Compartment c) const {
  for (const auto& r : rows) {
    if (r.compartment == c) return r;
  }
  throw InvalidParameter("compartment", static_cast<double>(static_cast<int>(c)),
                         "compartment present in table");
}

StatsTable compartment_stats(const Trajectory& traj, const Window& window) {
  StatsTable table;
  table.window = window;
  for (const Compartment c : compartments_of(traj)) {
    table.rows.push_back({c, std::numeric_limits<double>::infinity(),
                          -std::numeric_limits<double>::infinity(), 0.0});
  }

  const auto times = traj.times();
  const auto states = traj.states();
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (times[k] < window.from || times[k] > window.to) continue;
    ++table.samples;
    for (auto& row : table.rows) {
      const double v = component(states[k], row.compartment);
      row.min = std::min(row.min, v);
      row.max = std::max(row.max, v);
      row.mean += v;
    }
  }
  if (table.samples == 0) empty_window(window);
  for (auto& row : table.rows) {
    row.mean /= static_cast<double>(table.samples);
    // Summation rounding can push the mean of a constant series past its extrema.
    row.mean = std::clamp(row.mean, row.min, row.max);
  }
  return table;
}

PhasePlaneSeries phase_plane(const Trajectory& traj, const std::vector<Compartment>& axes,
                             const Window& window, bool proportions) {
  if (axes.size() < 2 || axes.size() > 3) {
    throw InvalidParameter("axes", static_cast<double>(axes.size()), "2 or 3 axes");
  }
  PhasePlaneSeries series;
  for (const Compartment c : axes) {
    std::string label(to_string(c));
    if (proportions) label[0] = static_cast<char>(label[0] - 'A' + 'a');
    series.labels.push_back(std::move(label));
  }

  const auto times = traj.times();
  const auto states = traj.states();
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (times[k] < window.from || times[k] > window.to) continue;
    const double scale = proportions ? states[k].n() : 1.0;
    std::vector<double> point;
    point.reserve(axes.size());
    for (const Compartment c : axes) point.push_back(component(states[k], c) / scale);
    series.points.push_back(std::move(point));
  }
  if (series.points.empty()) empty_window(window);
  return series;
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::Equal: return "equal";
    case Dominance::FirstBelow: return "first_dominated_by_second";
    case Dominance::FirstAbove: return "first_dominates_second";
    case Dominance::Mixed: return "mixed";
  }
  return "?";
}

ComparisonSummary compare_runs(const Trajectory& a, const Trajectory& b, Compartment compartment,
                               double after) {
  if (a.size() != b.size() || a.step() != b.step()) {
    std::ostringstream os;
    os << "time grids differ: " << a.size() << " samples at step " << a.step() << " vs "
       << b.size() << " at step " << b.step();
    throw Error(ErrorKind::GridMismatch, os.str());
  }
  ComparisonSummary out;
  out.compartment = compartment;
  out.after = after;
  out.differences.reserve(a.size());

  bool any_below = false;
  bool any_above = false;
  const auto times = a.times();
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = component(a.states()[k], compartment) - component(b.states()[k], compartment);
    out.differences.push_back(d);
    if (times[k] <= after) continue;
    out.max_gap = std::max(out.max_gap, std::fabs(d));
    any_below = any_below || d < 0.0;
    any_above = any_above || d > 0.0;
  }
  if (any_below && any_above) {
    out.verdict = Dominance::Mixed;
  } else if (any_below) {
    out.verdict = Dominance::FirstBelow;
  } else if (any_above) {
    out.verdict = Dominance::FirstAbove;
  } else {
    out.verdict = Dominance::Equal;
  }
  return out;
}

}  // namespace pseirs::stats
