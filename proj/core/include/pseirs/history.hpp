/**
 * @file history.hpp
 * @brief Prescribed solution on t <= 0 for starting a delay run.
 */
#pragma once

#include <variant>
#include <vector>

#include "pseirs/model.hpp"

namespace pseirs {

/** @brief Same state at every t <= 0. */
struct ConstantHistory {
  CompartmentState state;
};

/**
 * @brief Piecewise-linear history through (times[k], states[k]).
 *
 * times must be strictly increasing and end at exactly 0.
 */
struct SampledHistory {
  std::vector<double> times;
  std::vector<CompartmentState> states;
};

class HistoryFunction {
 public:
  HistoryFunction() : repr_(ConstantHistory{}) {}
  explicit HistoryFunction(ConstantHistory constant) : repr_(std::move(constant)) {}

  /** @throws InvalidParameter on unsorted times, a last time != 0, or negative states. */
  explicit HistoryFunction(SampledHistory sampled);

  /** @brief Constant history S=s0, E=0, I=i0, R=0. */
  static HistoryFunction constant(double s0, double i0) {
    return HistoryFunction(ConstantHistory{{s0, 0.0, i0, 0.0}});
  }

  /** @brief True when the history is defined on all of [-span, 0]. */
  [[nodiscard]] bool covers(double span) const noexcept;

  /** @brief Earliest time with a defined value; -infinity for constant histories. */
  [[nodiscard]] double lower_bound() const noexcept;

  /** @brief Value at t <= 0. @throws Error(OutOfDomain) outside the sampled range. */
  [[nodiscard]] CompartmentState operator()(double t) const;

  [[nodiscard]] bool is_constant() const noexcept {
    return std::holds_alternative<ConstantHistory>(repr_);
  }
  [[nodiscard]] const ConstantHistory* as_constant() const noexcept {
    return std::get_if<ConstantHistory>(&repr_);
  }
  [[nodiscard]] const SampledHistory* as_sampled() const noexcept {
    return std::get_if<SampledHistory>(&repr_);
  }

 private:
  std::variant<ConstantHistory, SampledHistory> repr_;
};

}  // namespace pseirs
