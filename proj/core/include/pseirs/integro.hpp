/**
 * @file integro.hpp
 * @brief Integral representations of E and R and the equivalence check
 *        between them and a delay-equation run.
 *
 *   E(t) = int_{t-omega}^{t} gamma S I / N (x) e^{-mu (t - x)} dx
 *   R(t) = int_{t-tau}^{t}   p alpha I(x)      e^{-mu (t - x)} dx
 *
 * A run started with the consistent E(0), R(0) reproduces both integrals for
 * every t >= 0 when p = 1. For p < 1 the recovered identity fails because
 * the delayed return flux in the R row carries no factor p.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "pseirs/dde.hpp"
#include "pseirs/model.hpp"
#include "pseirs/trajectory.hpp"

namespace pseirs::integro {

/** @throws Error(OutOfDomain) if the trajectory does not cover [t - omega, t]. */
[[nodiscard]] double exposed_integral(const Trajectory& traj, double t, const PseirsParams& params,
                                      dde::IncidenceForm form = dde::IncidenceForm::PerCapita);

/** @throws Error(OutOfDomain) if the trajectory does not cover [t - tau, t]. */
[[nodiscard]] double recovered_integral(const Trajectory& traj, double t,
                                        const PseirsParams& params);

struct EquivalenceReport {
  std::vector<double> times;
  std::vector<double> e_residuals;
  std::vector<double> r_residuals;
  double max_residual = 0.0;
  bool consistent_init = true;
};

struct EquivalenceOptions {
  /// Drop the 1/N factor from the exposed integrand. Demonstration only.
  bool unnormalized_incidence = false;
};

/**
 * @brief Compare both integrals with the run at evenly spaced times in
 *        [kappa, horizon].
 *
 * Residuals are |integral - value| / |value| (absolute when the value is 0).
 *
 * @throws Error(InconsistentInit) if the run overrode E(0) or R(0).
 * @throws Error(TrajectoryTooShort) if horizon < kappa.
 */
[[nodiscard]] EquivalenceReport verify_equivalence(const Trajectory& traj,
                                                   const PseirsParams& params,
                                                   std::size_t checkpoints,
                                                   const EquivalenceOptions& options = {});

}  // namespace pseirs::integro
