#pragma once

#include <stdexcept>

namespace hh {

// Query outside [0, B], an invalid interval, or a bound request whose
// evaluation points leave the declared domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An evaluation produced NaN or infinity.
class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive refinement exhausted its panel budget.
class MaxSubdivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A required hypothesis (certification, monotonicity, anchor value) does
// not hold for the supplied inputs.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed campaign configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hh
