#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pseirs/dde.hpp"
#include "pseirs/error.hpp"
#include "pseirs/trajectory.hpp"

using namespace pseirs;

namespace {

// Cubic in time for every compartment, with its exact derivative.
CompartmentState cubic(double t) {
  return {5.0 + t - 0.3 * t * t + 0.02 * t * t * t, 1.0 + 0.5 * t * t * t, 2.0 - t + t * t,
          0.1 * t * t * t};
}

CompartmentRates cubic_rate(double t) {
  return {1.0 - 0.6 * t + 0.06 * t * t, 1.5 * t * t, -1.0 + 2.0 * t, 0.3 * t * t};
}

Trajectory cubic_trajectory(double step, std::size_t n) {
  std::vector<CompartmentState> states;
  std::vector<CompartmentRates> derivs;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * step;
    states.push_back(cubic(t));
    derivs.push_back(cubic_rate(t));
  }
  return Trajectory(ModelKind::Pseirs, step, 1.0, HistoryFunction(ConstantHistory{cubic(0.0)}),
                    std::move(states), std::move(derivs));
}

}  // namespace

TEST(HistoryFunction, ConstantEverywhere) {
  const auto h = HistoryFunction::constant(63.0, 7.0);
  EXPECT_TRUE(h.covers(1e9));
  EXPECT_EQ(h(-30.0), (CompartmentState{63.0, 0.0, 7.0, 0.0}));
  EXPECT_THROW((void)h(0.5), Error);
}

TEST(HistoryFunction, SampledInterpolatesLinearly) {
  const HistoryFunction h(SampledHistory{{-2.0, -1.0, 0.0},
                                         {{10, 0, 0, 0}, {12, 1, 2, 0}, {14, 0, 4, 2}}});
  EXPECT_TRUE(h.covers(2.0));
  EXPECT_FALSE(h.covers(2.5));
  EXPECT_DOUBLE_EQ(h.lower_bound(), -2.0);
  const auto x = h(-0.25);
  EXPECT_DOUBLE_EQ(x.s, 13.5);
  EXPECT_DOUBLE_EQ(x.e, 0.25);
  EXPECT_DOUBLE_EQ(x.i, 3.5);
  EXPECT_DOUBLE_EQ(x.r, 1.5);
  EXPECT_THROW((void)h(-2.5), Error);
}

TEST(HistoryFunction, SampledRejectsMalformedInput) {
  EXPECT_THROW(HistoryFunction(SampledHistory{{-1.0, -0.5}, {{1, 0, 0, 0}, {1, 0, 0, 0}}}),
               InvalidParameter);
  EXPECT_THROW(HistoryFunction(SampledHistory{{0.0, -1.0}, {{1, 0, 0, 0}, {1, 0, 0, 0}}}),
               InvalidParameter);
  EXPECT_THROW(HistoryFunction(SampledHistory{{-1.0, 0.0}, {{1, 0, 0, 0}, {-1, 0, 0, 0}}}),
               InvalidParameter);
}

TEST(HistoryEval, GridPointsReturnStoredSamples) {
  const auto traj = cubic_trajectory(0.1, 51);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    EXPECT_EQ(history_eval(traj, traj.times()[k]), traj.states()[k]);
  }
}

TEST(HistoryEval, HermiteReproducesCubicsExactly) {
  const auto traj = cubic_trajectory(0.1, 51);
  for (std::size_t k = 0; k + 1 < traj.size(); ++k) {
    for (double theta : {0.25, 0.5, 0.9}) {
      const double t = (static_cast<double>(k) + theta) * 0.1;
      const auto got = history_eval(traj, t);
      const auto want = cubic(t);
      EXPECT_LE(fixtures::rel_diff(got.s, want.s), 1e-10) << t;
      EXPECT_LE(fixtures::rel_diff(got.e, want.e), 1e-10) << t;
      EXPECT_LE(fixtures::rel_diff(got.i, want.i), 1e-10) << t;
      EXPECT_LE(fixtures::rel_diff(got.r, want.r), 1e-10) << t;
    }
  }
}

TEST(HistoryEval, NegativeTimesReadTheHistory) {
  const auto params = fixtures::canonical();
  const auto traj = dde::simulate(validate_pseirs(params), fixtures::canonical_history(), 5.0,
                                  dde::default_step(params));
  EXPECT_EQ(history_eval(traj, -kappa(params)), (CompartmentState{63.0, 0.0, 7.0, 0.0}));
  EXPECT_EQ(history_eval(traj, -0.01), (CompartmentState{63.0, 0.0, 7.0, 0.0}));
}

TEST(HistoryEval, OutsideTheDomainThrows) {
  const auto traj = cubic_trajectory(0.1, 11);
  for (double t : {-1.5, 1.0 + 1e-6, 10.0}) {
    try {
      (void)history_eval(traj, t);
      FAIL() << "expected OutOfDomain at " << t;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::OutOfDomain);
    }
  }
}

TEST(Trajectory, TimesAreExactMultiplesOfTheStep) {
  const auto traj = cubic_trajectory(0.0075, 1000);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    EXPECT_EQ(traj.times()[k], static_cast<double>(k) * 0.0075);
  }
  EXPECT_EQ(traj.horizon(), 999 * 0.0075);
}

TEST(Trajectory, RejectsRaggedInput) {
  std::vector<CompartmentState> states(3);
  std::vector<CompartmentRates> derivs(2);
  EXPECT_THROW(Trajectory(ModelKind::Pseirs, 0.1, 0.0, HistoryFunction{}, states, derivs),
               InvalidParameter);
  EXPECT_THROW(Trajectory(ModelKind::Pseirs, 0.0, 0.0, HistoryFunction{}, states,
                          std::vector<CompartmentRates>(3)),
               InvalidParameter);
}
