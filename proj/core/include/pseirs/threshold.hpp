/**
 * @file threshold.hpp
 * @brief Reproduction numbers, a linear stability probe and long-run
 *        classification of runs.
 *
 * Two thresholds are exposed because they answer different questions when
 * the population itself grows (beta > mu):
 *
 *  - r0_consistent = gamma e^{-mu omega} / (mu + epsilon + alpha) decides
 *    whether the absolute infected count grows near the infection-free state
 *    (linearize the I row with S/N -> 1).
 *  - r0_fraction = gamma e^{-beta omega} / (epsilon + beta + alpha) decides
 *    whether the infected fraction I/N grows. Linearizing i = I/N adds the
 *    dilution rate beta - mu to the decay and discounts the delayed term by
 *    e^{-(beta - mu) omega}, which yields exactly this closed form.
 *
 * classify_equilibrium works on proportions, so it follows r0_fraction.
 */
#pragma once

#include <string_view>

#include "pseirs/model.hpp"
#include "pseirs/trajectory.hpp"

namespace pseirs::threshold {

/** @brief gamma e^{-beta omega} / (epsilon + beta + alpha). */
[[nodiscard]] double r0_fraction(const PseirsParams& params) noexcept;

/** @brief gamma e^{-mu omega} / (mu + epsilon + alpha). */
[[nodiscard]] double r0_consistent(const PseirsParams& params) noexcept;

enum class Growth { Growing, Decaying, Marginal };

[[nodiscard]] std::string_view to_string(Growth g) noexcept;

struct ProbeResult {
  Growth verdict = Growth::Marginal;
  double rate = 0.0;  // fitted exponential rate of I over the second half
};

/**
 * @brief Integrate dI/dt = gamma e^{-mu omega} I(t - omega) - (mu + epsilon + alpha) I
 *        from I = 1 on [-omega, 0] and classify by the fitted growth rate.
 *
 * |rate| < 1e-3 (mu + epsilon + alpha) is Marginal.
 *
 * @throws InvalidParameter if mu + epsilon + alpha <= 0, omega <= 0, or
 *         horizon < 10 max(omega, 1 / (mu + epsilon + alpha)).
 */
[[nodiscard]] ProbeResult stability_probe(const PseirsParams& params, double horizon);

/** @brief Shortest horizon stability_probe accepts. */
[[nodiscard]] double min_probe_horizon(const PseirsParams& params) noexcept;

struct ProportionPoint {
  double s = 0.0;
  double e = 0.0;
  double i = 0.0;
  double r = 0.0;
};

struct EquilibriumClass {
  enum class Kind { DiseaseFree, Endemic, Undetermined };
  Kind kind = Kind::Undetermined;
  ProportionPoint point;  // tail mean in proportions; meaningful for Endemic
};

[[nodiscard]] std::string_view to_string(EquilibriumClass::Kind k) noexcept;

/**
 * @brief Classify the trailing tail_fraction of a run in proportion space.
 *
 * DiseaseFree if max i <= 1e-6. Endemic if min i > 1e-4 and each
 * proportion varies by at most 1e-3 peak to peak. Otherwise Undetermined.
 *
 * @throws InvalidParameter unless 0 < tail_fraction <= 0.5.
 * @throws Error(TrajectoryTooShort) if horizon <= kappa.
 */
[[nodiscard]] EquilibriumClass classify_equilibrium(const Trajectory& traj, double tail_fraction);

}  // namespace pseirs::threshold
