#pragma once

#include <stdexcept>
#include <string>

namespace cfpp {

/// Inputs outside the mathematical or numerical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Model parameters that violate a structural invariant (bad config).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A series or iteration hit its term budget before the stopping rule fired.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A log-log fit saw a zero or non-finite curve value.
class DegenerateFit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kVersion = "1.0.0";

}  // namespace cfpp
