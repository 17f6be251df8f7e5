#pragma once

#include <stdexcept>
#include <string>

namespace spinportrait {

/// Argument outside an operation's domain (bad projection, malformed
/// partition, mismatched dimensions).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical or structural configuration that cannot work, e.g. a sphere
/// quadrature below its exactness threshold or a degenerate region slice.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value that should satisfy a type invariant (unit trace, positivity,
/// normalization) does not.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A prior weight of zero makes the tomogram of that rotation undefined.
class DegeneratePriorError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The measurement frames do not determine the state. `shell()` names the
/// offending operator shell L when the failure is tied to one, -1 otherwise.
class FeasibilityError : public std::runtime_error {
 public:
  explicit FeasibilityError(const std::string& what, int shell = -1,
                            double value = 0.0)
      : std::runtime_error(what), shell_(shell), value_(value) {}

  int shell() const noexcept { return shell_; }
  double value() const noexcept { return value_; }

 private:
  int shell_;
  double value_;
};

/// Every restart of a direction search ended on an infeasible set.
class OptimizationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spinportrait
