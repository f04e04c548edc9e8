#pragma once

#include <stdexcept>
#include <string>

namespace tornheim {

/// A request that violates an operation's preconditions (even weight,
/// non-positive parameters, j < 2 for a polylog constant, ...).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The input is well formed but lies outside what the pipeline can express,
/// e.g. a Clausen constant outside the G2 constant field.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The numeric oracle could not reach the requested tolerance within its
/// configured budget. Never replaced by a silently inaccurate value.
struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A symbolic identity disagreed with its numeric oracle.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tornheim
