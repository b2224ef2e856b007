#pragma once

#include <stdexcept>
#include <string>

namespace xyq {

/// Raised when caller-supplied parameters violate a precondition.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a computation leaves its numerical validity region
/// (positivity violations, integrator step-size underflow).
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xyq
