#pragma once

#include <stdexcept>
#include <string>

namespace b3 {

/// Exact division by a zero scalar (field inverse of 0, or a vanishing
/// q-factorial denominator reached through the quotient route).
struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

/// The rewrite engine exceeded its step budget.  Termination of the
/// straightening rules is a structural property, so hitting this is an
/// engine bug (or a deliberately corrupted rule set), not a user error.
struct StepBudgetExceeded : std::runtime_error {
    explicit StepBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A computation was asked for beyond the configured degree budget.
struct DegreeBudgetExceeded : std::runtime_error {
    explicit DegreeBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidArgument : std::invalid_argument {
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace b3
