/**
 * @file trajectory.hpp
 * @brief Uniform-grid solution with dense output on [-kappa, horizon].
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pseirs/history.hpp"
#include "pseirs/model.hpp"

namespace pseirs {

enum class ModelKind { Sir, Pseirs };

/**
 * @brief Sampled solution of a run plus the history it was started from.
 *
 * Samples sit at t_k = k * step. Between samples the solution is the cubic
 * Hermite interpolant of the bracketing (state, derivative) pairs; for t < 0
 * it is the history. SIR runs store E = 0 throughout.
 *
 * Immutable once constructed.
 */
class Trajectory {
 public:
  /**
   * @throws InvalidParameter on a non-positive step, an empty or ragged
   *         sample set, or a history that does not cover [-lag_span, 0].
   */
  Trajectory(ModelKind kind, double step, double lag_span, HistoryFunction history,
             std::vector<CompartmentState> states, std::vector<CompartmentRates> derivs,
             bool init_overridden = false);

  [[nodiscard]] ModelKind kind() const noexcept { return kind_; }
  [[nodiscard]] double step() const noexcept { return step_; }
  /** @brief kappa of the run; history_eval accepts t >= -lag_span(). */
  [[nodiscard]] double lag_span() const noexcept { return lag_span_; }
  [[nodiscard]] std::size_t size() const noexcept { return states_.size(); }
  [[nodiscard]] double horizon() const noexcept { return times_.back(); }
  [[nodiscard]] bool init_overridden() const noexcept { return init_overridden_; }

  [[nodiscard]] std::span<const double> times() const noexcept { return times_; }
  [[nodiscard]] std::span<const CompartmentState> states() const noexcept { return states_; }
  [[nodiscard]] std::span<const CompartmentRates> derivs() const noexcept { return derivs_; }
  [[nodiscard]] const HistoryFunction& history() const noexcept { return history_; }

 private:
  ModelKind kind_;
  double step_;
  double lag_span_;
  HistoryFunction history_;
  std::vector<double> times_;
  std::vector<CompartmentState> states_;
  std::vector<CompartmentRates> derivs_;
  bool init_overridden_;
};

/**
 * @brief Solution value at an arbitrary time.
 *
 * t < 0 reads the history, grid times return the stored sample exactly and
 * anything else is cubic Hermite interpolation.
 *
 * @throws Error(OutOfDomain) if t < -lag_span or t > horizon.
 */
[[nodiscard]] CompartmentState history_eval(const Trajectory& traj, double t);

namespace detail {

/** @brief Shared lookup used by Trajectory and by solvers mid-run. */
[[nodiscard]] CompartmentState dense_eval(const HistoryFunction& history, double lag_span,
                                          double step, std::span<const CompartmentState> states,
                                          std::span<const CompartmentRates> derivs, double t);

[[nodiscard]] CompartmentState hermite(const CompartmentState& y0, const CompartmentRates& d0,
                                       const CompartmentState& y1, const CompartmentRates& d1,
                                       double h, double theta) noexcept;

}  // namespace detail

}  // namespace pseirs
