#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "pseirs/error.hpp"
#include "pseirs/sir.hpp"

using namespace pseirs;

namespace {

double max_infected(const Trajectory& traj) {
  double best = 0.0;
  for (const auto& x : traj.states()) best = std::max(best, x.i);
  return best;
}

}  // namespace

TEST(SirDerivatives, HandEvaluatedRows) {
  const auto d = sir::derivatives({11.0, 1.0, 0.0}, {0.06, 0.1});
  EXPECT_NEAR(d.ds, -0.66, 1e-12);
  EXPECT_NEAR(d.di, 0.56, 1e-12);
  EXPECT_NEAR(d.dr, 0.1, 1e-12);

  const auto pure = sir::derivatives({0.0, 5.0, 0.0}, {0.1, 0.2});
  EXPECT_EQ(pure.ds, 0.0);
  EXPECT_NEAR(pure.di, -1.0, 1e-12);
  EXPECT_NEAR(pure.dr, 1.0, 1e-12);
}

TEST(SirDerivatives, NoInfectedNoFlow) {
  const auto d = sir::derivatives({42.0, 0.0, 3.0}, {0.3, 0.2});
  EXPECT_EQ(d.ds, 0.0);
  EXPECT_EQ(d.di, 0.0);
  EXPECT_EQ(d.dr, 0.0);
}

TEST(SirSimulate, LowContactPeak) {
  const auto traj = sir::simulate({0.06, 0.1}, {11.0, 1.0, 0.0}, 200.0, 0.01);
  EXPECT_EQ(traj.size(), 20001u);
  EXPECT_NEAR(max_infected(traj), 7.189, 0.005 * 7.189);
}

TEST(SirSimulate, HighContactPeak) {
  const auto traj = sir::simulate({0.2, 0.1}, {11.0, 1.0, 0.0}, 200.0, 0.01);
  EXPECT_NEAR(max_infected(traj), 9.9545, 0.005 * 9.9545);
}

TEST(SirSimulate, ZeroInfectedStaysPut) {
  const auto traj = sir::simulate({0.3, 0.2}, {11.0, 0.0, 2.0}, 50.0, 0.05);
  for (const auto& x : traj.states()) {
    EXPECT_EQ(x.s, 11.0);
    EXPECT_EQ(x.i, 0.0);
    EXPECT_EQ(x.r, 2.0);
  }
}

TEST(SirSimulate, PropertyConservationAndMonotonicity) {
  const auto traj = sir::simulate({0.2, 0.1}, {11.0, 1.0, 0.0}, 100.0, 0.01);
  const auto states = traj.states();
  for (std::size_t k = 1; k < states.size(); ++k) {
    EXPECT_NEAR(states[k].n(), 12.0, 1e-10);
    EXPECT_LE(states[k].s, states[k - 1].s);
    EXPECT_GE(states[k].r, states[k - 1].r);
  }
}

TEST(SirSimulate, PropertyStepHalvingConverges) {
  const auto coarse = sir::simulate({0.06, 0.1}, {11.0, 1.0, 0.0}, 50.0, 0.02);
  const auto fine = sir::simulate({0.06, 0.1}, {11.0, 1.0, 0.0}, 50.0, 0.01);
  for (std::size_t k = 0; k < coarse.size(); ++k) {
    EXPECT_NEAR(coarse.states()[k].i, fine.states()[2 * k].i, 1e-8);
  }
}

TEST(SirSimulate, RejectsBadArguments) {
  EXPECT_THROW((void)sir::simulate({0.06, 0.1}, {11.0, 1.0, 0.0}, 10.0, 0.0), InvalidParameter);
  EXPECT_THROW((void)sir::simulate({0.06, 0.1}, {-1.0, 1.0, 0.0}, 10.0, 0.1), InvalidParameter);
  EXPECT_THROW((void)sir::simulate({0.06, 0.0}, {11.0, 1.0, 0.0}, 10.0, 0.1), InvalidParameter);
}

TEST(SirSimulate, HugeStepIsReported) {
  try {
    (void)sir::simulate({5.0, 0.1}, {100.0, 1.0, 0.0}, 10.0, 1.0);
    FAIL() << "expected StepTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StepTooLarge);
  }
}

TEST(SirThreshold, ReproductionNumber) {
  EXPECT_DOUBLE_EQ(sir::r0({0.06, 0.1}), 0.6);
  EXPECT_DOUBLE_EQ(sir::r0({0.3, 0.3}), 1.0);
  EXPECT_DOUBLE_EQ(sir::r0({0.1, 0.2}), 0.5);
}

TEST(SirThreshold, EndemicPrediction) {
  const auto a = sir::endemic_prediction({0.2, 0.1}, 12.0);
  EXPECT_NEAR(a.s_inf, 6.0, 1e-12);
  EXPECT_NEAR(a.i_inf, 60.0, 1e-12);
  EXPECT_NEAR(a.r_inf, 6.0, 1e-12);

  const auto b = sir::endemic_prediction({0.5, 0.25}, 1.0);
  EXPECT_NEAR(b.s_inf, 0.5, 1e-12);
  EXPECT_NEAR(b.i_inf, 2.0, 1e-12);
  EXPECT_NEAR(b.r_inf, 0.5, 1e-12);

  try {
    (void)sir::endemic_prediction({0.2, 0.2}, 12.0);
    FAIL() << "expected NotEndemic";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotEndemic);
  }
}

TEST(SirThreshold, DiseaseFreePrediction) {
  for (double n : {12.0, 0.0, 5000.0}) {
    const auto d = sir::disease_free_prediction(n);
    EXPECT_EQ(d.s_inf, n);
    EXPECT_EQ(d.i_inf, 0.0);
    EXPECT_EQ(d.r_inf, 0.0);
  }
}

TEST(SirPeakOracle, ClosedForm) {
  EXPECT_NEAR(sir::peak_oracle({0.06, 0.1}, {11.0, 1.0, 0.0}), 7.187, 0.01);
  EXPECT_NEAR(sir::peak_oracle({0.2, 0.1}, {11.0, 1.0, 0.0}), 9.9545, 0.001);
  try {
    (void)sir::peak_oracle({0.01, 1.0}, {11.0, 1.0, 0.0});
    FAIL() << "expected NoPeak";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoPeak);
  }
}

TEST(SirPeakOracle, PropertyAgreesWithIntegrator) {
  for (double beta : {0.05, 0.1, 0.3, 1.0}) {
    const SirParams params{beta, 0.1};
    const SirState init{20.0, 0.5, 0.0};
    const auto traj = sir::simulate(params, init, 300.0, 0.005);
    const double peak = sir::peak_oracle(params, init);
    EXPECT_NEAR(max_infected(traj), peak, 1e-5 * peak) << "beta " << beta;
  }
}
