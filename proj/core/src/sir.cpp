#include "pseirs/sir.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "pseirs/error.hpp"

namespace pseirs::sir {

SirDerivative derivatives(const SirState& state, const SirParams& params) noexcept {
  const double incidence = params.beta * state.i * state.s;
  const double recovery = params.alpha * state.i;
  return {-incidence, incidence - recovery, recovery};
}

namespace {

SirState axpy(const SirState& y, double h, const SirDerivative& d) noexcept {
  return {y.s + h * d.ds, y.i + h * d.di, y.r + h * d.dr};
}

CompartmentState widen(const SirState& x) noexcept { return {x.s, 0.0, x.i, x.r}; }

CompartmentRates widen(const SirDerivative& d) noexcept { return {d.ds, 0.0, d.di, d.dr}; }

}  // namespace

Trajectory simulate(const SirParams& params, const SirState& init, double horizon, double step) {
  validate_sir(params);
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidParameter("step", step, "step > 0");
  if (!(horizon >= step) || !std::isfinite(horizon)) {
    throw InvalidParameter("horizon", horizon, "horizon >= step");
  }
  if (!(init.s >= 0.0 && init.i >= 0.0 && init.r >= 0.0)) {
    throw InvalidParameter("init", std::fmin(init.s, std::fmin(init.i, init.r)), "S, I, R >= 0");
  }

  const auto steps = static_cast<std::size_t>(std::ceil(horizon / step - 1e-9));
  const double floor_value = -1e-9 * init.n();

  std::vector<CompartmentState> states;
  std::vector<CompartmentRates> derivs;
  states.reserve(steps + 1);
  derivs.reserve(steps + 1);

  SirState y = init;
  SirDerivative d = derivatives(y, params);
  states.push_back(widen(y));
  derivs.push_back(widen(d));
  for (std::size_t k = 0; k < steps; ++k) {
    const SirDerivative k1 = d;
    const SirDerivative k2 = derivatives(axpy(y, 0.5 * step, k1), params);
    const SirDerivative k3 = derivatives(axpy(y, 0.5 * step, k2), params);
    const SirDerivative k4 = derivatives(axpy(y, step, k3), params);
    y.s += step / 6.0 * (k1.ds + 2.0 * k2.ds + 2.0 * k3.ds + k4.ds);
    y.i += step / 6.0 * (k1.di + 2.0 * k2.di + 2.0 * k3.di + k4.di);
    y.r += step / 6.0 * (k1.dr + 2.0 * k2.dr + 2.0 * k3.dr + k4.dr);

    if (y.s < floor_value || y.i < floor_value || y.r < floor_value) {
      std::ostringstream os;
      os << "SIR compartment below -1e-9 N at t = " << static_cast<double>(k + 1) * step
         << "; reduce the step";
      throw Error(ErrorKind::StepTooLarge, os.str());
    }
    if (!std::isfinite(y.s) || !std::isfinite(y.i) || !std::isfinite(y.r)) {
      throw Error(ErrorKind::NonFiniteState, "SIR state became non-finite");
    }
    d = derivatives(y, params);
    states.push_back(widen(y));
    derivs.push_back(widen(d));
  }

  return Trajectory(ModelKind::Sir, step, 0.0, HistoryFunction(ConstantHistory{widen(init)}),
                    std::move(states), std::move(derivs));
}

Trajectory with_model_derivatives(const Trajectory& samples, const SirParams& params) {
  std::vector<CompartmentState> states(samples.states().begin(), samples.states().end());
  std::vector<CompartmentRates> derivs;
  derivs.reserve(states.size());
  for (const auto& x : states) derivs.push_back(widen(derivatives({x.s, x.i, x.r}, params)));
  return Trajectory(ModelKind::Sir, samples.step(), 0.0, samples.history(), std::move(states),
                    std::move(derivs));
}

double r0(const SirParams& params) noexcept { return params.beta / params.alpha; }

SirPrediction endemic_prediction(const SirParams& params, double n) {
  const double ratio = r0(params);
  if (!(ratio > 1.0)) {
    std::ostringstream os;
    os << "endemic prediction needs R0 > 1, got " << ratio;
    throw Error(ErrorKind::NotEndemic, os.str());
  }
  return {n / ratio, n / params.beta * (ratio - 1.0), params.alpha * n / params.beta * (ratio - 1.0)};
}

SirPrediction disease_free_prediction(double n) noexcept { return {n, 0.0, 0.0}; }

double peak_oracle(const SirParams& params, const SirState& init) {
  if (!(params.beta > 0.0) || !(params.beta * init.s / params.alpha > 1.0)) {
    throw Error(ErrorKind::NoPeak, "beta S0 / alpha <= 1: infected count is monotone decreasing");
  }
  const double rho = params.alpha / params.beta;
  return init.n() - rho + rho * std::log(rho / init.s);
}

}  // namespace pseirs::sir
