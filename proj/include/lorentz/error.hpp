#pragma once

#include <stdexcept>
#include <string>

namespace lorentz {

// Raised when a comparison function is evaluated outside the domain on
// which its defining formula is valid (e.g. past the first conjugate or
// focal radius for negative curvature bounds).
class ComparisonDomainError : public std::domain_error {
public:
  ComparisonDomainError(std::string function, double c, double s, double t,
                        std::string reason)
      : std::domain_error(function + ": " + reason + " (c=" + std::to_string(c) +
                          ", s=" + std::to_string(s) + ", t=" + std::to_string(t) + ")"),
        function_(std::move(function)), c_(c), s_(s), t_(t),
        reason_(std::move(reason)) {}

  const std::string& function() const noexcept { return function_; }
  double c() const noexcept { return c_; }
  double s() const noexcept { return s_; }
  double t() const noexcept { return t_; }
  const std::string& reason() const noexcept { return reason_; }

private:
  std::string function_;
  double c_, s_, t_;
  std::string reason_;
};

// Event outside the declared chart domain of a metric model.
class ChartDomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A stated precondition (unit norm, orthogonality, causal character, ...)
// failed beyond its tolerance.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Operation requested on a model that does not support it.
class UnsupportedModelError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace lorentz
