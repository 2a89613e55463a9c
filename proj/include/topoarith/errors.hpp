#pragma once

#include <stdexcept>
#include <string>

namespace topoarith {

/// v2(0) has no value.
struct UndefinedValuation : std::domain_error {
    UndefinedValuation() : std::domain_error("2-adic valuation of 0 is undefined") {}
};

/// Natural subtraction x - y with y > x.
struct Underflow : std::domain_error {
    using std::domain_error::domain_error;
};

/// A negative integer was given where the carrier is the naturals.
struct CarrierMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// between(a, b) with a not strictly below b.
struct EmptyInterval : std::domain_error {
    using std::domain_error::domain_error;
};

struct PreconditionViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A construction was asked of a spec it does not apply to.
struct UnsupportedSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A search ran past its configured step or scan budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace topoarith
