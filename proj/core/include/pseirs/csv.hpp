/**
 * @file csv.hpp
 * @brief Trajectory and phase-plane CSV files.
 *
 * Numbers are written in the shortest decimal form that parses back to the
 * same double, so write -> read -> write is byte-identical.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pseirs/model.hpp"
#include "pseirs/stats.hpp"
#include "pseirs/trajectory.hpp"

namespace pseirs::csv {

[[nodiscard]] std::string format_number(double value);

/** @brief Header t,S,I,R for SIR runs and t,S,E,I,R,N otherwise. */
void write_trajectory(std::ostream& out, const Trajectory& traj);

struct TrajectorySamples {
  ModelKind kind = ModelKind::Pseirs;
  double step = 0.0;
  std::vector<double> times;
  std::vector<CompartmentState> states;
};

/**
 * @brief Parse a file written by write_trajectory.
 * @throws Error(ConfigError) on a malformed header, row or non-uniform grid.
 */
[[nodiscard]] TrajectorySamples read_trajectory(std::istream& in);

void write_phase_plane(std::ostream& out, const stats::PhasePlaneSeries& series);

}  // namespace pseirs::csv
