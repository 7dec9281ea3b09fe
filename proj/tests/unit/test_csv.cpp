#include <cstdlib>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pseirs/csv.hpp"
#include "pseirs/dde.hpp"
#include "pseirs/error.hpp"
#include "pseirs/sir.hpp"

using namespace pseirs;

namespace {

std::string to_csv(const Trajectory& traj) {
  std::ostringstream out;
  csv::write_trajectory(out, traj);
  return out.str();
}

Trajectory rebuild(const csv::TrajectorySamples& s) {
  return Trajectory(s.kind, s.step, 0.0, HistoryFunction(ConstantHistory{s.states.front()}),
                    s.states, std::vector<CompartmentRates>(s.states.size()));
}

}  // namespace

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(csv::format_number(0.1), "0.1");
  EXPECT_EQ(csv::format_number(63.0), "63");
  EXPECT_EQ(csv::format_number(-2.5e-300), "-2.5e-300");
  for (double v : {1.0 / 3.0, 2.0 / 3.0 * 1e100, std::numeric_limits<double>::denorm_min()}) {
    EXPECT_EQ(std::strtod(csv::format_number(v).c_str(), nullptr), v);
  }
}

TEST(TrajectoryCsv, PseirsHeaderAndPopulationColumn) {
  const auto params = fixtures::canonical();
  const auto traj = dde::simulate(validate_pseirs(params), fixtures::canonical_history(), 1.0,
                                  dde::default_step(params));
  const auto text = to_csv(traj);
  EXPECT_EQ(text.substr(0, text.find('\n')), "t,S,E,I,R,N");
  std::istringstream in(text);
  const auto samples = csv::read_trajectory(in);
  EXPECT_EQ(samples.kind, ModelKind::Pseirs);
  EXPECT_EQ(samples.step, dde::default_step(params));
  EXPECT_EQ(samples.states, std::vector<CompartmentState>(traj.states().begin(), traj.states().end()));
}

TEST(TrajectoryCsv, PropertyRoundTripIsBitIdentical) {
  const auto sir_traj = sir::simulate({0.2, 0.1}, {11.0, 1.0, 0.0}, 30.0, 0.01);
  const auto params = fixtures::canonical(0.4);
  const auto dde_traj = dde::simulate(validate_pseirs(params), fixtures::canonical_history(), 60.0,
                                      dde::default_step(params));
  for (const auto* traj : {&sir_traj, &dde_traj}) {
    const auto first = to_csv(*traj);
    std::istringstream in(first);
    EXPECT_EQ(to_csv(rebuild(csv::read_trajectory(in))), first);
  }
}

TEST(TrajectoryCsv, MalformedInputIsAConfigError) {
  for (const char* text : {"x,y\n0,1\n", "t,S,I,R\n0,1,2,3\n", "t,S,I,R\n0,1,2,3\n0.1,1,2\n",
                           "t,S,I,R\n0,1,2,3\n0.1,1,2,3\n0.25,1,2,3\n", "t,S,I,R\n0,1,2,3\n0.1,a,2,3\n"}) {
    std::istringstream in(text);
    try {
      (void)csv::read_trajectory(in);
      FAIL() << "accepted: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ConfigError);
    }
  }
}

TEST(PhasePlaneCsv, ColumnsAreTheAxes) {
  stats::PhasePlaneSeries series{{"s", "i"}, {{0.5, 0.25}, {0.75, 0.125}}};
  std::ostringstream out;
  csv::write_phase_plane(out, series);
  EXPECT_EQ(out.str(), "s,i\n0.5,0.25\n0.75,0.125\n");
}
