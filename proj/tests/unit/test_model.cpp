#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pseirs/error.hpp"
#include "pseirs/model.hpp"

using namespace pseirs;

TEST(Validate, CanonicalParametersAreAccepted) {
  EXPECT_NO_THROW((void)validate_pseirs(fixtures::canonical()));
}

TEST(Validate, ProbabilityAboveOneIsRejected) {
  auto params = fixtures::canonical();
  params.p = 1.5;
  try {
    (void)validate_pseirs(params);
    FAIL() << "expected InvalidParameter";
  } catch (const InvalidParameter& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
    EXPECT_EQ(e.name(), "p");
    EXPECT_DOUBLE_EQ(e.value(), 1.5);
    EXPECT_EQ(e.constraint(), "0 <= p <= 1");
  }
}

TEST(Validate, ZeroLatencyIsRejected) {
  auto params = fixtures::canonical();
  params.omega = 0.0;
  try {
    (void)validate_pseirs(params);
    FAIL() << "expected InvalidParameter";
  } catch (const InvalidParameter& e) {
    EXPECT_EQ(e.name(), "omega");
    EXPECT_DOUBLE_EQ(e.value(), 0.0);
    EXPECT_EQ(e.constraint(), "omega > 0");
  }
}

TEST(Validate, NegativeRatesAndNonFiniteValuesAreRejected) {
  for (double PseirsParams::*field :
       {&PseirsParams::beta, &PseirsParams::mu, &PseirsParams::epsilon, &PseirsParams::alpha,
        &PseirsParams::gamma}) {
    auto params = fixtures::canonical();
    params.*field = -0.1;
    EXPECT_THROW((void)validate_pseirs(params), InvalidParameter);
    params.*field = std::nan("");
    EXPECT_THROW((void)validate_pseirs(params), InvalidParameter);
  }
  auto params = fixtures::canonical();
  params.tau = 0.0;
  EXPECT_THROW((void)validate_pseirs(params), InvalidParameter);
}

TEST(Validate, SirRejectsNonPositiveRecovery) {
  EXPECT_NO_THROW(validate_sir({0.06, 0.1}));
  EXPECT_THROW(validate_sir({0.06, 0.0}), InvalidParameter);
  EXPECT_THROW(validate_sir({-0.06, 0.1}), InvalidParameter);
}

TEST(Kappa, IsTheLargerDelay) {
  auto params = fixtures::canonical();
  EXPECT_DOUBLE_EQ(kappa(params), 30.0);
  params.omega = 30.0;
  EXPECT_DOUBLE_EQ(kappa(params), 30.0);
  params.tau = 1.0;
  EXPECT_DOUBLE_EQ(kappa(params), 30.0);
}

TEST(Compartment, NamesRoundTrip) {
  for (auto c : {Compartment::S, Compartment::E, Compartment::I, Compartment::R, Compartment::N}) {
    EXPECT_EQ(parse_compartment(to_string(c)), c);
  }
  EXPECT_FALSE(parse_compartment("X").has_value());
  const CompartmentState x{1.0, 2.0, 3.0, 4.0};
  EXPECT_EQ(component(x, Compartment::I), 3.0);
  EXPECT_EQ(component(x, Compartment::N), 10.0);
}
