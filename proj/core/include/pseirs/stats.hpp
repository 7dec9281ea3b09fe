/**
 * @file stats.hpp
 * @brief Summary tables, phase-plane projections and run comparison.
 */
#pragma once

#include <string>
#include <vector>

#include "pseirs/model.hpp"
#include "pseirs/trajectory.hpp"

namespace pseirs::stats {

/** @brief Closed time interval [from, to]. */
struct Window {
  double from = 0.0;
  double to = 0.0;
};

/** @brief Whole sample range of a trajectory. */
[[nodiscard]] Window full_window(const Trajectory& traj) noexcept;

struct CompartmentSummary {
  Compartment compartment = Compartment::S;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;  // arithmetic mean over samples, not a time average
};

struct StatsTable {
  Window window;
  std::size_t samples = 0;
  std::vector<CompartmentSummary> rows;  // S, I, R for SIR runs; S, E, I, R otherwise

  [[nodiscard]] const CompartmentSummary& row(Compartment c) const;
};

/** @throws Error(EmptyWindow) if no sample lies in the window. */
[[nodiscard]] StatsTable compartment_stats(const Trajectory& traj, const Window& window);

struct PhasePlaneSeries {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> points;  // one row per sample, one column per axis
};

/**
 * @brief Project samples in the window onto 2 or 3 compartments.
 *
 * With proportions set, coordinates are divided by N(t) and labels read
 * "s", "e", "i", "r".
 *
 * @throws InvalidParameter unless 2 or 3 axes are given.
 * @throws Error(EmptyWindow) if no sample lies in the window.
 */
[[nodiscard]] PhasePlaneSeries phase_plane(const Trajectory& traj,
                                           const std::vector<Compartment>& axes,
                                           const Window& window, bool proportions = false);

enum class Dominance { Equal, FirstBelow, FirstAbove, Mixed };

[[nodiscard]] std::string to_string(Dominance d);

struct ComparisonSummary {
  Compartment compartment = Compartment::R;
  double after = 0.0;
  std::vector<double> differences;  // a - b at every sample
  double max_gap = 0.0;             // max |a - b| over samples with t > after
  Dominance verdict = Dominance::Equal;
};

/**
 * @brief Pointwise comparison of one compartment in two runs.
 *
 * The verdict only considers samples with t > after: FirstBelow means
 * a <= b everywhere there (and not identical).
 *
 * @throws Error(GridMismatch) unless both runs share the same time grid.
 */
[[nodiscard]] ComparisonSummary compare_runs(const Trajectory& a, const Trajectory& b,
                                             Compartment compartment, double after = 0.0);

}  // namespace pseirs::stats
