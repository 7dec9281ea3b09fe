/**
 * @file model.hpp
 * @brief Parameter blocks, compartment states and their validation.
 *
 * All compartment quantities are real-valued node counts. Nothing in the
 * library rounds to integers; fractional nodes are meaningful as mean-field
 * averages.
 */
#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace pseirs {

/** @brief Rates of the classical SIR model (unnormalized mass action). */
struct SirParams {
  double beta = 0.0;   // infection rate per node pair per time
  double alpha = 0.0;  // recovery rate per time
};

struct SirState {
  double s = 0.0;
  double i = 0.0;
  double r = 0.0;

  [[nodiscard]] double n() const noexcept { return s + i + r; }
};

/**
 * @brief Constants of the delayed SEIRS model with probabilistic immunity.
 *
 * omega delays exposure to infectiousness; tau is the length of temporary
 * immunity. A node leaving the infected class recovers with probability p.
 */
struct PseirsParams {
  double beta = 0.0;     // birth rate
  double mu = 0.0;       // natural death rate
  double epsilon = 0.0;  // infection-induced death rate
  double alpha = 0.0;    // recovery rate
  double gamma = 0.0;    // effective contact rate
  double omega = 0.0;    // latency delay
  double tau = 0.0;      // immunity period
  double p = 1.0;        // immunity probability
};

/** @brief One sample of the four compartments; n() is always s+e+i+r. */
struct CompartmentState {
  double s = 0.0;
  double e = 0.0;
  double i = 0.0;
  double r = 0.0;

  [[nodiscard]] double n() const noexcept { return s + e + i + r; }

  friend bool operator==(const CompartmentState&, const CompartmentState&) = default;
};

/** @brief Time derivative of a CompartmentState. */
struct CompartmentRates {
  double ds = 0.0;
  double de = 0.0;
  double di = 0.0;
  double dr = 0.0;

  [[nodiscard]] double dn() const noexcept { return ds + de + di + dr; }

  friend bool operator==(const CompartmentRates&, const CompartmentRates&) = default;
};

enum class Compartment { S, E, I, R, N };

[[nodiscard]] std::string_view to_string(Compartment c) noexcept;
[[nodiscard]] std::optional<Compartment> parse_compartment(std::string_view name) noexcept;
[[nodiscard]] double component(const CompartmentState& state, Compartment c) noexcept;

/**
 * @brief PseirsParams that passed validate_pseirs().
 *
 * Only validate_pseirs() constructs one, so holding a ValidatedPseirs is
 * proof that every bound holds.
 */
class ValidatedPseirs {
 public:
  [[nodiscard]] const PseirsParams& get() const noexcept { return params_; }
  [[nodiscard]] const PseirsParams* operator->() const noexcept { return &params_; }

 private:
  friend ValidatedPseirs validate_pseirs(const PseirsParams& params);
  explicit ValidatedPseirs(const PseirsParams& params) : params_(params) {}
  PseirsParams params_;
};

/** @throws InvalidParameter naming the first violated bound. */
ValidatedPseirs validate_pseirs(const PseirsParams& params);

/** @throws InvalidParameter if beta < 0 or alpha <= 0. */
void validate_sir(const SirParams& params);

/** @brief Length of history a run needs: max(tau, omega). */
[[nodiscard]] double kappa(const PseirsParams& params) noexcept;

}  // namespace pseirs
