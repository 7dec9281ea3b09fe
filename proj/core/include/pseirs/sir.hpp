/**
 * @file sir.hpp
 * @brief Classical SIR model with unnormalized mass-action incidence.
 *
 *   dS/dt = -beta I S
 *   dI/dt =  beta I S - alpha I
 *   dR/dt =  alpha I
 */
#pragma once

#include "pseirs/model.hpp"
#include "pseirs/trajectory.hpp"

namespace pseirs::sir {

struct SirDerivative {
  double ds = 0.0;
  double di = 0.0;
  double dr = 0.0;
};

/** @brief Limit point predicted by the closed-form equilibrium formulas. */
struct SirPrediction {
  double s_inf = 0.0;
  double i_inf = 0.0;
  double r_inf = 0.0;
};

[[nodiscard]] SirDerivative derivatives(const SirState& state, const SirParams& params) noexcept;

/**
 * @brief Fixed-step RK4 run on [0, horizon].
 *
 * The returned Trajectory stores E = 0 and a constant history equal to init.
 *
 * @throws InvalidParameter for bad params, step <= 0, horizon < step or a
 *         negative initial state.
 * @throws Error(StepTooLarge) if a compartment falls below -1e-9 N.
 */
[[nodiscard]] Trajectory simulate(const SirParams& params, const SirState& init, double horizon,
                                  double step);

/** @brief Same samples with derivatives recomputed from the model. */
[[nodiscard]] Trajectory with_model_derivatives(const Trajectory& samples, const SirParams& params);

/** @brief beta / alpha. */
[[nodiscard]] double r0(const SirParams& params) noexcept;

/**
 * @brief (N/R0, (N/beta)(R0-1), (alpha N/beta)(R0-1)).
 *
 * Not a fixed point of the ODE: the components need not sum to N.
 *
 * @throws Error(NotEndemic) if R0 <= 1.
 */
[[nodiscard]] SirPrediction endemic_prediction(const SirParams& params, double n);

/** @brief (N, 0, 0). */
[[nodiscard]] SirPrediction disease_free_prediction(double n) noexcept;

/**
 * @brief Peak infected count from the SIR first integral.
 *
 * I_max = N - rho + rho ln(rho / S0) with rho = alpha / beta.
 *
 * @throws Error(NoPeak) if beta S0 / alpha <= 1 (I only decreases).
 */
[[nodiscard]] double peak_oracle(const SirParams& params, const SirState& init);

}  // namespace pseirs::sir
