/**
 * @file dde.hpp
 * @brief Delayed SEIRS model with probabilistic immunity.
 *
 * With incidence g(t) = gamma S(t) I(t) / N(t) the system reads
 *
 *   dS/dt = beta N - mu S - g(t) + alpha I(t - tau) e^{-mu tau}
 *   dE/dt = g(t) - g(t - omega) e^{-mu omega} - mu E
 *   dI/dt = g(t - omega) e^{-mu omega} - (mu + epsilon + alpha) I
 *   dR/dt = p alpha I - alpha I(t - tau) e^{-mu tau} - mu R
 *
 * Summing the rows gives dN/dt = (beta - mu) N - (epsilon + (1 - p) alpha) I;
 * the delayed return flux cancels between the S and R rows. Note that the
 * return flux carries no factor p, so for p < 1 the R row is not the time
 * derivative of the recovered-integral representation.
 */
#pragma once

#include <optional>

#include "pseirs/history.hpp"
#include "pseirs/model.hpp"
#include "pseirs/trajectory.hpp"

namespace pseirs::dde {

/**
 * @brief How the exposed-class integrand treats the incidence.
 *
 * PerCapita uses gamma S I / N. Unnormalized drops the division by N; it
 * exists only to show that this variant is not consistent with the solver.
 */
enum class IncidenceForm { PerCapita, Unnormalized };

/**
 * @brief Right-hand side, evaluated row by row as written above.
 * @throws Error(ZeroPopulation) if now.n() or at_lag_omega.n() is zero.
 */
[[nodiscard]] CompartmentRates derivatives(double t, const CompartmentState& now,
                                           const CompartmentState& at_lag_omega,
                                           const CompartmentState& at_lag_tau,
                                           const PseirsParams& params);

/** @brief alpha I - alpha I(t - tau) e^{-mu tau} - mu R: the recovered row at p = 1. */
[[nodiscard]] double classical_seirs_recovered_rate(const CompartmentState& now,
                                                    const CompartmentState& at_lag_tau,
                                                    const PseirsParams& params) noexcept;

/** @brief (beta - mu) N - (epsilon + (1 - p) alpha) I. */
[[nodiscard]] double population_rate(const CompartmentState& now,
                                     const PseirsParams& params) noexcept;

/**
 * @brief E(0) that makes the run continuous with its history:
 * the integral over [-omega, 0] of gamma S I / N e^{mu x}.
 */
[[nodiscard]] double consistent_initial_exposed(const HistoryFunction& history,
                                                const PseirsParams& params,
                                                IncidenceForm form = IncidenceForm::PerCapita);

/** @brief R(0) = integral over [-tau, 0] of p alpha I(x) e^{mu x}. */
[[nodiscard]] double consistent_initial_recovered(const HistoryFunction& history,
                                                  const PseirsParams& params);

/** @brief Explicit E(0) / R(0); setting either marks the run as overridden. */
struct InitOverride {
  std::optional<double> exposed;
  std::optional<double> recovered;

  [[nodiscard]] bool any() const noexcept { return exposed.has_value() || recovered.has_value(); }
};

/** @brief min(omega, tau, 1) / 20. */
[[nodiscard]] double default_step(const PseirsParams& params) noexcept;

/**
 * @brief Method-of-steps RK4 run on [0, horizon].
 *
 * S(0) and I(0) come from history(0); E(0) and R(0) from the consistent
 * integrals unless overridden. Delayed values are read through the
 * trajectory's dense output as it grows.
 *
 * @throws InvalidParameter if step > min(omega, tau) / 4, horizon < step, or
 *         the history does not cover [-kappa, 0].
 * @throws Error(StepTooLarge) if a compartment drops below -1e-9 N(0).
 * @throws Error(ZeroPopulation) if N reaches 0.
 * @throws Error(NonFiniteState) if the state overflows.
 */
[[nodiscard]] Trajectory simulate(const ValidatedPseirs& params, const HistoryFunction& history,
                                  double horizon, double step, const InitOverride& init = {});

/**
 * @brief Recompute the derivative column of a sampled run from its states.
 *
 * Lags only ever reach cells that are already complete, so rebuilding front
 * to back reproduces the solver's derivatives exactly.
 */
[[nodiscard]] Trajectory with_model_derivatives(const Trajectory& samples,
                                                const ValidatedPseirs& params);

}  // namespace pseirs::dde
