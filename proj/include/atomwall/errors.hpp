#pragma once

#include <stdexcept>
#include <string>

namespace atomwall {

// Argument outside the mathematical or physical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Invalid configuration (bad grid, missing temperature, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical integral did not reach its tolerance within the budget. Carries
// the error estimate that was achieved so callers can decide what to do.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double value, double err_estimate)
      : std::runtime_error(what), value_(value), err_estimate_(err_estimate) {}

  double value() const noexcept { return value_; }
  double err_estimate() const noexcept { return err_estimate_; }

 private:
  double value_;
  double err_estimate_;
};

}  // namespace atomwall
