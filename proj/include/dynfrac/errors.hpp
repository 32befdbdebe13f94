#pragma once

#include <stdexcept>
#include <string>

namespace dynfrac {

// Bad physical parameters (negative modulus, V beyond c_R, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Symbol has nonzero winding or otherwise cannot be split.
struct FactorizationError : NumericalError {
    using NumericalError::NumericalError;
};

// Malformed user input (config files, tables, schedules).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace dynfrac
