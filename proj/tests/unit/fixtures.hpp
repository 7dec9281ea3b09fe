#pragma once

#include <cmath>

#include "pseirs/history.hpp"
#include "pseirs/model.hpp"

namespace fixtures {

inline pseirs::PseirsParams canonical(double p = 1.0) {
  return {.beta = 0.33, .mu = 0.006, .epsilon = 0.06, .alpha = 0.04,
          .gamma = 0.308, .omega = 0.15, .tau = 30.0, .p = p};
}

inline pseirs::HistoryFunction canonical_history() {
  return pseirs::HistoryFunction::constant(63.0, 7.0);
}

inline double rel_diff(double a, double b) {
  const double scale = std::fmax(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

}  // namespace fixtures
