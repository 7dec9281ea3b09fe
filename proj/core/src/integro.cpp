#include "pseirs/integro.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pseirs/error.hpp"
#include "pseirs/quadrature.hpp"

namespace pseirs::integro {

namespace {

void require_window(const Trajectory& traj, double from, double to) {
  if (from < -traj.lag_span() || to > traj.horizon() || to < 0.0) {
    std::ostringstream os;
    os << "integration window [" << from << ", " << to << "] not covered by trajectory on ["
       << -traj.lag_span() << ", " << traj.horizon() << "]";
    throw Error(ErrorKind::OutOfDomain, os.str());
  }
}

double relative(double approx, double exact) {
  const double diff = std::fabs(approx - exact);
  return exact == 0.0 ? diff : diff / std::fabs(exact);
}

}  // namespace

double exposed_integral(const Trajectory& traj, double t, const PseirsParams& params,
                        dde::IncidenceForm form) {
  require_window(traj, t - params.omega, t);
  const auto integrand = [&](double x) {
    const CompartmentState v = history_eval(traj, x);
    const double rate = form == dde::IncidenceForm::PerCapita
                            ? params.gamma * v.s * (v.i / v.n())
                            : params.gamma * v.s * v.i;
    return rate * std::exp(-params.mu * (t - x));
  };
  return quadrature::simpson_converged(integrand, t - params.omega, t);
}

double recovered_integral(const Trajectory& traj, double t, const PseirsParams& params) {
  require_window(traj, t - params.tau, t);
  const auto integrand = [&](double x) {
    return params.p * params.alpha * history_eval(traj, x).i * std::exp(-params.mu * (t - x));
  };
  return quadrature::simpson_converged(integrand, t - params.tau, t);
}

EquivalenceReport verify_equivalence(const Trajectory& traj, const PseirsParams& params,
                                     std::size_t checkpoints, const EquivalenceOptions& options) {
  if (traj.init_overridden()) {
    throw Error(ErrorKind::InconsistentInit,
                "run overrode E(0) or R(0); the integral representation does not apply");
  }
  if (checkpoints == 0) throw InvalidParameter("checkpoints", 0.0, "checkpoints >= 1");
  const double start = kappa(params);
  if (traj.horizon() < start) {
    throw Error(ErrorKind::TrajectoryTooShort, "horizon shorter than kappa");
  }

  const auto form = options.unnormalized_incidence ? dde::IncidenceForm::Unnormalized
                                                   : dde::IncidenceForm::PerCapita;
  EquivalenceReport report;
  report.consistent_init = true;
  for (std::size_t j = 0; j < checkpoints; ++j) {
    const double t = checkpoints == 1
                         ? traj.horizon()
                         : start + (traj.horizon() - start) * static_cast<double>(j) /
                                       static_cast<double>(checkpoints - 1);
    const CompartmentState x = history_eval(traj, t);
    const double e_res = relative(exposed_integral(traj, t, params, form), x.e);
    const double r_res = relative(recovered_integral(traj, t, params), x.r);
    report.times.push_back(t);
    report.e_residuals.push_back(e_res);
    report.r_residuals.push_back(r_res);
    report.max_residual = std::max({report.max_residual, e_res, r_res});
  }
  return report;
}

}  // namespace pseirs::integro
