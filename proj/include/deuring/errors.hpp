#pragma once

#include <stdexcept>
#include <string>

namespace deuring {

// Index outside a table or sieve limit.
struct BoundsError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Argument outside the half-plane where a series or bound is defined.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Two routes that must agree did not.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// A report or cache file could not be written or read.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A theorem-mode hypothesis does not hold; what() names it.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace deuring
