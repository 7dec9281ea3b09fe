#include "pseirs/dde.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "pseirs/error.hpp"
#include "pseirs/quadrature.hpp"

namespace pseirs::dde {

namespace {

// gamma S I / N, ordered so that S I is never formed: N grows like
// e^{(beta - mu) t} and S I overflows long before S, I or N do.
double incidence(const CompartmentState& x, double gamma) noexcept {
  return gamma * x.s * (x.i / x.n());
}

void require_population(const CompartmentState& x, const char* which) {
  if (!(x.n() > 0.0)) {
    std::ostringstream os;
    os << "total population " << which << " is " << x.n() << "; incidence is undefined";
    throw Error(ErrorKind::ZeroPopulation, os.str());
  }
}

CompartmentState axpy(const CompartmentState& y, double h, const CompartmentRates& d) noexcept {
  return {y.s + h * d.ds, y.e + h * d.de, y.i + h * d.di, y.r + h * d.dr};
}

bool finite(const CompartmentState& x) noexcept {
  return std::isfinite(x.s) && std::isfinite(x.e) && std::isfinite(x.i) && std::isfinite(x.r);
}

}  // namespace

CompartmentRates derivatives(double /*t*/, const CompartmentState& now,
                             const CompartmentState& at_lag_omega,
                             const CompartmentState& at_lag_tau, const PseirsParams& params) {
  require_population(now, "at t");
  require_population(at_lag_omega, "at t - omega");

  const double n = now.n();
  const double new_exposed = incidence(now, params.gamma);
  const double new_infectious =
      incidence(at_lag_omega, params.gamma) * std::exp(-params.mu * params.omega);
  const double immunity_lost = params.alpha * at_lag_tau.i * std::exp(-params.mu * params.tau);

  CompartmentRates d;
  d.ds = params.beta * n - params.mu * now.s - new_exposed + immunity_lost;
  d.de = new_exposed - new_infectious - params.mu * now.e;
  d.di = new_infectious - (params.mu + params.epsilon + params.alpha) * now.i;
  d.dr = params.p * params.alpha * now.i - immunity_lost - params.mu * now.r;
  return d;
}

double classical_seirs_recovered_rate(const CompartmentState& now,
                                      const CompartmentState& at_lag_tau,
                                      const PseirsParams& params) noexcept {
  const double immunity_lost = params.alpha * at_lag_tau.i * std::exp(-params.mu * params.tau);
  return params.alpha * now.i - immunity_lost - params.mu * now.r;
}

double population_rate(const CompartmentState& now, const PseirsParams& params) noexcept {
  return (params.beta - params.mu) * now.n() -
         (params.epsilon + (1.0 - params.p) * params.alpha) * now.i;
}

double consistent_initial_exposed(const HistoryFunction& history, const PseirsParams& params,
                                  IncidenceForm form) {
  if (!history.covers(params.omega)) {
    throw InvalidParameter("history", history.lower_bound(), "history covers [-omega, 0]");
  }
  const auto integrand = [&](double x) {
    const CompartmentState h = history(x);
    const double rate = form == IncidenceForm::PerCapita ? incidence(h, params.gamma)
                                                         : params.gamma * h.s * h.i;
    return rate * std::exp(params.mu * x);
  };
  return quadrature::simpson_converged(integrand, -params.omega, 0.0, {.rel_tol = 1e-12});
}

double consistent_initial_recovered(const HistoryFunction& history, const PseirsParams& params) {
  if (!history.covers(params.tau)) {
    throw InvalidParameter("history", history.lower_bound(), "history covers [-tau, 0]");
  }
  const auto integrand = [&](double x) {
    return params.p * params.alpha * history(x).i * std::exp(params.mu * x);
  };
  return quadrature::simpson_converged(integrand, -params.tau, 0.0, {.rel_tol = 1e-12});
}

double default_step(const PseirsParams& params) noexcept {
  return std::min({params.omega, params.tau, 1.0}) / 20.0;
}

Trajectory simulate(const ValidatedPseirs& validated, const HistoryFunction& history,
                    double horizon, double step, const InitOverride& init) {
  const PseirsParams& params = validated.get();
  const double lag_span = kappa(params);
  const double max_step = std::min(params.omega, params.tau) / 4.0;
  if (!(step > 0.0 && step <= max_step)) {
    throw InvalidParameter("step", step, "0 < step <= min(omega, tau) / 4");
  }
  if (!(horizon >= step) || !std::isfinite(horizon)) {
    throw InvalidParameter("horizon", horizon, "horizon >= step");
  }
  if (!history.covers(lag_span)) {
    throw InvalidParameter("history", history.lower_bound(), "history covers [-kappa, 0]");
  }

  const CompartmentState at_zero = history(0.0);
  CompartmentState y{at_zero.s,
                     init.exposed.value_or(consistent_initial_exposed(history, params)),
                     at_zero.i,
                     init.recovered.value_or(consistent_initial_recovered(history, params))};
  if (y.e < 0.0 || y.r < 0.0) {
    throw InvalidParameter("initial", std::min(y.e, y.r), "E(0), R(0) >= 0");
  }
  require_population(y, "at t = 0");

  const auto steps = static_cast<std::size_t>(std::ceil(horizon / step - 1e-9));
  const double floor_value = -1e-9 * y.n();

  std::vector<CompartmentState> states;
  std::vector<CompartmentRates> derivs;
  states.reserve(steps + 1);
  derivs.reserve(steps + 1);

  // A stage whose lag lands on t = 0 from a step that began inside the history
  // takes the history's left limit: E(0) and R(0) need not match history(0).
  const double snap = 1e-9 * step;
  const auto lagged = [&](double t, double delay, double step_start) {
    const double s = t - delay;
    if (s >= 0.0 && s <= snap && step_start - delay < -snap) return history(0.0);
    return detail::dense_eval(history, lag_span, step, states, derivs, s);
  };
  const auto rhs = [&](double t, const CompartmentState& x, double step_start) {
    return derivatives(t, x, lagged(t, params.omega, step_start),
                       lagged(t, params.tau, step_start), params);
  };

  states.push_back(y);
  derivs.push_back(rhs(0.0, y, 0.0));
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * step;
    const CompartmentRates k1 = derivs.back();
    const CompartmentRates k2 = rhs(t + 0.5 * step, axpy(y, 0.5 * step, k1), t);
    const CompartmentRates k3 = rhs(t + 0.5 * step, axpy(y, 0.5 * step, k2), t);
    const CompartmentRates k4 = rhs(t + step, axpy(y, step, k3), t);
    y.s += step / 6.0 * (k1.ds + 2.0 * k2.ds + 2.0 * k3.ds + k4.ds);
    y.e += step / 6.0 * (k1.de + 2.0 * k2.de + 2.0 * k3.de + k4.de);
    y.i += step / 6.0 * (k1.di + 2.0 * k2.di + 2.0 * k3.di + k4.di);
    y.r += step / 6.0 * (k1.dr + 2.0 * k2.dr + 2.0 * k3.dr + k4.dr);

    const double t_next = static_cast<double>(k + 1) * step;
    if (!finite(y)) {
      std::ostringstream os;
      os << "state became non-finite at t = " << t_next;
      throw Error(ErrorKind::NonFiniteState, os.str());
    }
    if (y.s < floor_value || y.e < floor_value || y.i < floor_value || y.r < floor_value) {
      const auto [name, value] = y.s < floor_value   ? std::pair{"S", y.s}
                                 : y.e < floor_value ? std::pair{"E", y.e}
                                 : y.i < floor_value ? std::pair{"I", y.i}
                                                     : std::pair{"R", y.r};
      std::ostringstream os;
      os << "compartment " << name << " = " << value << " below -1e-9 N(0) at t = " << t_next;
      throw Error(ErrorKind::StepTooLarge, os.str());
    }
    states.push_back(y);
    derivs.push_back(rhs(t_next, y, t_next));
  }

  return Trajectory(ModelKind::Pseirs, step, lag_span, history, std::move(states),
                    std::move(derivs), init.any());
}

Trajectory with_model_derivatives(const Trajectory& samples, const ValidatedPseirs& validated) {
  const PseirsParams& params = validated.get();
  const double lag_span = kappa(params);
  const double step = samples.step();
  const auto all = samples.states();

  std::vector<CompartmentState> states(all.begin(), all.end());
  std::vector<CompartmentRates> derivs;
  derivs.reserve(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    const double t = static_cast<double>(k) * step;
    // Only the first k samples are visible; their derivatives are final.
    const std::span<const CompartmentState> done(states.data(), k);
    const std::span<const CompartmentRates> done_d(derivs.data(), k);
    const auto lagged = [&](double when) {
      if (when < 0.0) return samples.history()(when);
      return detail::dense_eval(samples.history(), lag_span, step, done, done_d, when);
    };
    derivs.push_back(
        derivatives(t, states[k], lagged(t - params.omega), lagged(t - params.tau), params));
  }
  return Trajectory(ModelKind::Pseirs, step, lag_span, samples.history(), std::move(states),
                    std::move(derivs), samples.init_overridden());
}

}  // namespace pseirs::dde
