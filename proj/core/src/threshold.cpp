#include "pseirs/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "pseirs/error.hpp"

namespace pseirs::threshold {

double r0_fraction(const PseirsParams& params) noexcept {
  return params.gamma * std::exp(-params.beta * params.omega) /
         (params.epsilon + params.beta + params.alpha);
}

double r0_consistent(const PseirsParams& params) noexcept {
  return params.gamma * std::exp(-params.mu * params.omega) /
         (params.mu + params.epsilon + params.alpha);
}

std::string_view to_string(Growth g) noexcept {
  switch (g) {
    case Growth::Growing: return "Growing";
    case Growth::Decaying: return "Decaying";
    case Growth::Marginal: return "Marginal";
  }
  return "?";
}

std::string_view to_string(EquilibriumClass::Kind k) noexcept {
  switch (k) {
    case EquilibriumClass::Kind::DiseaseFree: return "DiseaseFree";
    case EquilibriumClass::Kind::Endemic: return "Endemic";
    case EquilibriumClass::Kind::Undetermined: return "Undetermined";
  }
  return "?";
}

double min_probe_horizon(const PseirsParams& params) noexcept {
  const double decay = params.mu + params.epsilon + params.alpha;
  return 10.0 * std::max(params.omega, 1.0 / decay);
}

ProbeResult stability_probe(const PseirsParams& params, double horizon) {
  const double decay = params.mu + params.epsilon + params.alpha;
  if (!(decay > 0.0)) throw InvalidParameter("mu+epsilon+alpha", decay, "> 0");
  if (!(params.omega > 0.0)) throw InvalidParameter("omega", params.omega, "omega > 0");
  if (!(horizon >= min_probe_horizon(params))) {
    throw InvalidParameter("horizon", horizon, "horizon >= 10 max(omega, 1/(mu+epsilon+alpha))");
  }

  const double gain = params.gamma * std::exp(-params.mu * params.omega);
  const double omega = params.omega;
  const double h = std::min(omega, 1.0 / decay) / 20.0;
  const auto steps = static_cast<std::size_t>(std::ceil(horizon / h));

  // The equation is linear, so the whole buffer may be rescaled at will;
  // log_offset keeps ln x + log_offset equal to the true ln I.
  std::vector<double> x{1.0};
  std::vector<double> dx;
  double log_offset = 0.0;

  const auto lag = [&](double t) {
    if (t <= 0.0) return 1.0 * std::exp(-log_offset);
    auto k = static_cast<std::size_t>(std::floor(t / h));
    k = std::min(k, x.size() - 2);
    const double theta = (t - static_cast<double>(k) * h) / h;
    const double t2 = theta * theta;
    const double t3 = t2 * theta;
    return (2.0 * t3 - 3.0 * t2 + 1.0) * x[k] + (t3 - 2.0 * t2 + theta) * h * dx[k] +
           (-2.0 * t3 + 3.0 * t2) * x[k + 1] + (t3 - t2) * h * dx[k + 1];
  };
  const auto rhs = [&](double t, double v) { return gain * lag(t - omega) - decay * v; };

  dx.push_back(rhs(0.0, 1.0));

  const double fit_from = 0.5 * horizon;
  double n = 0.0, st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * h;
    const double v = x.back();
    // x.back() has no successor yet; a lag never reaches past it because h <= omega.
    const double k1 = dx.back();
    const double k2 = rhs(t + 0.5 * h, v + 0.5 * h * k1);
    const double k3 = rhs(t + 0.5 * h, v + 0.5 * h * k2);
    const double k4 = rhs(t + h, v + h * k3);
    const double next = v + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    x.push_back(next);
    dx.push_back(rhs(t + h, next));

    const double mag = std::fabs(next);
    if (mag > 1e100 || (mag < 1e-100 && mag > 0.0)) {
      const double scale = 1.0 / mag;
      for (auto& value : x) value *= scale;
      for (auto& value : dx) value *= scale;
      log_offset -= std::log(scale);
    }

    const double t_next = t + h;
    if (t_next >= fit_from && x.back() > 0.0) {
      const double y = std::log(x.back()) + log_offset;
      n += 1.0;
      st += t_next;
      sy += y;
      stt += t_next * t_next;
      sty += t_next * y;
    }
  }

  ProbeResult result;
  const double denom = n * stt - st * st;
  result.rate = denom > 0.0 ? (n * sty - st * sy) / denom : 0.0;
  if (std::fabs(result.rate) < 1e-3 * decay) {
    result.verdict = Growth::Marginal;
  } else {
    result.verdict = result.rate > 0.0 ? Growth::Growing : Growth::Decaying;
  }
  return result;
}

EquilibriumClass classify_equilibrium(const Trajectory& traj, double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 0.5)) {
    throw InvalidParameter("tail_fraction", tail_fraction, "0 < tail_fraction <= 0.5");
  }
  if (!(traj.horizon() > traj.lag_span())) {
    throw Error(ErrorKind::TrajectoryTooShort, "classification needs horizon > kappa");
  }

  const double from = traj.horizon() * (1.0 - tail_fraction);
  constexpr double inf = std::numeric_limits<double>::infinity();
  ProportionPoint lo{inf, inf, inf, inf};
  ProportionPoint hi{-inf, -inf, -inf, -inf};
  ProportionPoint sum;
  std::size_t count = 0;

  const auto times = traj.times();
  const auto states = traj.states();
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (times[k] < from) continue;
    const auto& x = states[k];
    const double n = x.n();
    const ProportionPoint q{x.s / n, x.e / n, x.i / n, x.r / n};
    lo = {std::min(lo.s, q.s), std::min(lo.e, q.e), std::min(lo.i, q.i), std::min(lo.r, q.r)};
    hi = {std::max(hi.s, q.s), std::max(hi.e, q.e), std::max(hi.i, q.i), std::max(hi.r, q.r)};
    sum = {sum.s + q.s, sum.e + q.e, sum.i + q.i, sum.r + q.r};
    ++count;
  }

  EquilibriumClass out;
  if (count == 0) return out;
  const auto c = static_cast<double>(count);
  out.point = {sum.s / c, sum.e / c, sum.i / c, sum.r / c};

  constexpr double kFreeBand = 1e-6;
  constexpr double kEndemicFloor = 1e-4;
  constexpr double kSettledBand = 1e-3;
  if (hi.i <= kFreeBand) {
    out.kind = EquilibriumClass::Kind::DiseaseFree;
  } else if (lo.i > kEndemicFloor && hi.s - lo.s <= kSettledBand && hi.e - lo.e <= kSettledBand &&
             hi.i - lo.i <= kSettledBand && hi.r - lo.r <= kSettledBand) {
    out.kind = EquilibriumClass::Kind::Endemic;
  } else {
    out.kind = EquilibriumClass::Kind::Undetermined;
  }
  return out;
}

}  // namespace pseirs::threshold
