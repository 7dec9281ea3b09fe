/**
 * @file error.hpp
 * @brief Exception types shared by every pseirs module.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pseirs {

/** @brief Stable machine-readable error categories. */
enum class ErrorKind {
  InvalidParameter,
  StepTooLarge,
  ZeroPopulation,
  NonFiniteState,
  OutOfDomain,
  NotEndemic,
  NoPeak,
  InconsistentInit,
  TrajectoryTooShort,
  InvalidGraphParams,
  InsufficientTail,
  EmptyWindow,
  GridMismatch,
  ConfigError,
  IoError,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/** @brief A parameter violated one of its documented bounds. */
class InvalidParameter : public Error {
 public:
  InvalidParameter(std::string name, double value, std::string constraint);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] double value() const noexcept { return value_; }
  [[nodiscard]] const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string name_;
  double value_;
  std::string constraint_;
};

}  // namespace pseirs
