#include "pseirs/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pseirs/error.hpp"

namespace pseirs {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::ZeroPopulation: return "ZeroPopulation";
    case ErrorKind::NonFiniteState: return "NonFiniteState";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NotEndemic: return "NotEndemic";
    case ErrorKind::NoPeak: return "NoPeak";
    case ErrorKind::InconsistentInit: return "InconsistentInit";
    case ErrorKind::TrajectoryTooShort: return "TrajectoryTooShort";
    case ErrorKind::InvalidGraphParams: return "InvalidGraphParams";
    case ErrorKind::InsufficientTail: return "InsufficientTail";
    case ErrorKind::EmptyWindow: return "EmptyWindow";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string describe(const std::string& name, double value, const std::string& constraint) {
  std::ostringstream os;
  os << "invalid parameter " << name << " = " << value << " (requires " << constraint << ")";
  return os.str();
}

}  // namespace

InvalidParameter::InvalidParameter(std::string name, double value, std::string constraint)
    : Error(ErrorKind::InvalidParameter, describe(name, value, constraint)),
      name_(std::move(name)),
      value_(value),
      constraint_(std::move(constraint)) {}

std::string_view to_string(Compartment c) noexcept {
  switch (c) {
    case Compartment::S: return "S";
    case Compartment::E: return "E";
    case Compartment::I: return "I";
    case Compartment::R: return "R";
    case Compartment::N: return "N";
  }
  return "?";
}

std::optional<Compartment> parse_compartment(std::string_view name) noexcept {
  if (name == "S") return Compartment::S;
  if (name == "E") return Compartment::E;
  if (name == "I") return Compartment::I;
  if (name == "R") return Compartment::R;
  if (name == "N") return Compartment::N;
  return std::nullopt;
}

double component(const CompartmentState& state, Compartment c) noexcept {
  switch (c) {
    case Compartment::S: return state.s;
    case Compartment::E: return state.e;
    case Compartment::I: return state.i;
    case Compartment::R: return state.r;
    case Compartment::N: return state.n();
  }
  return 0.0;
}

ValidatedPseirs validate_pseirs(const PseirsParams& params) {
  const auto non_negative = [](const char* name, double v) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidParameter(name, v, std::string(name) + " >= 0");
  };
  non_negative("beta", params.beta);
  non_negative("mu", params.mu);
  non_negative("epsilon", params.epsilon);
  non_negative("alpha", params.alpha);
  non_negative("gamma", params.gamma);
  if (!(params.omega > 0.0) || !std::isfinite(params.omega)) {
    throw InvalidParameter("omega", params.omega, "omega > 0");
  }
  if (!(params.tau > 0.0) || !std::isfinite(params.tau)) {
    throw InvalidParameter("tau", params.tau, "tau > 0");
  }
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw InvalidParameter("p", params.p, "0 <= p <= 1");
  }
  return ValidatedPseirs(params);
}

void validate_sir(const SirParams& params) {
  if (!(params.beta >= 0.0) || !std::isfinite(params.beta)) {
    throw InvalidParameter("beta", params.beta, "beta >= 0");
  }
  if (!(params.alpha > 0.0) || !std::isfinite(params.alpha)) {
    throw InvalidParameter("alpha", params.alpha, "alpha > 0");
  }
}

double kappa(const PseirsParams& params) noexcept { return std::max(params.tau, params.omega); }

}  // namespace pseirs
