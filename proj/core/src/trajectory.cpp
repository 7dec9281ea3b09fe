#include "pseirs/trajectory.hpp"

#include <cmath>
#include <sstream>

#include "pseirs/error.hpp"

namespace pseirs {

Trajectory::Trajectory(ModelKind kind, double step, double lag_span, HistoryFunction history,
                       std::vector<CompartmentState> states, std::vector<CompartmentRates> derivs,
                       bool init_overridden)
    : kind_(kind),
      step_(step),
      lag_span_(lag_span),
      history_(std::move(history)),
      states_(std::move(states)),
      derivs_(std::move(derivs)),
      init_overridden_(init_overridden) {
  if (!(step_ > 0.0) || !std::isfinite(step_)) throw InvalidParameter("step", step_, "step > 0");
  if (states_.empty()) throw InvalidParameter("samples", 0.0, "at least one sample");
  if (states_.size() != derivs_.size()) {
    throw InvalidParameter("derivs", static_cast<double>(derivs_.size()),
                           "one derivative sample per state");
  }
  if (!(lag_span_ >= 0.0) || !history_.covers(lag_span_)) {
    throw InvalidParameter("history", history_.lower_bound(), "history covers [-kappa, 0]");
  }
  times_.resize(states_.size());
  for (std::size_t k = 0; k < times_.size(); ++k) times_[k] = static_cast<double>(k) * step_;
}

CompartmentState history_eval(const Trajectory& traj, double t) {
  return detail::dense_eval(traj.history(), traj.lag_span(), traj.step(), traj.states(),
                            traj.derivs(), t);
}

namespace detail {

CompartmentState hermite(const CompartmentState& y0, const CompartmentRates& d0,
                         const CompartmentState& y1, const CompartmentRates& d1, double h,
                         double theta) noexcept {
  const double t2 = theta * theta;
  const double t3 = t2 * theta;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = (t3 - 2.0 * t2 + theta) * h;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = (t3 - t2) * h;
  return {h00 * y0.s + h10 * d0.ds + h01 * y1.s + h11 * d1.ds,
          h00 * y0.e + h10 * d0.de + h01 * y1.e + h11 * d1.de,
          h00 * y0.i + h10 * d0.di + h01 * y1.i + h11 * d1.di,
          h00 * y0.r + h10 * d0.dr + h01 * y1.r + h11 * d1.dr};
}

CompartmentState dense_eval(const HistoryFunction& history, double lag_span, double step,
                            std::span<const CompartmentState> states,
                            std::span<const CompartmentRates> derivs, double t) {
  const double last = static_cast<double>(states.size() - 1) * step;
  if (t < -lag_span || t > last || std::isnan(t)) {
    std::ostringstream os;
    os << "t = " << t << " outside [" << -lag_span << ", " << last << "]";
    throw Error(ErrorKind::OutOfDomain, os.str());
  }
  if (t < 0.0) return history(t);

  auto k = static_cast<std::size_t>(std::floor(t / step));
  if (k >= states.size()) k = states.size() - 1;
  // floor(t / step) can land one cell off when t is within an ulp of a node.
  if (k > 0 && static_cast<double>(k) * step > t) --k;
  if (k + 1 < states.size() && static_cast<double>(k + 1) * step <= t) ++k;

  const double tk = static_cast<double>(k) * step;
  if (tk == t) return states[k];
  const double theta = (t - tk) / step;
  return hermite(states[k], derivs[k], states[k + 1], derivs[k + 1], step, theta);
}

}  // namespace detail

}  // namespace pseirs
