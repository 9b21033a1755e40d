#pragma once

#include <stdexcept>
#include <string>

namespace prequant {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed command lines and group specs. CLI maps these to exit code 1.
struct UsageError : Error {
    using Error::Error;
};

// Invalid input: bad parameters, irrelevant prime, point outside the alcove,
// degree-cap violations. CLI maps these to exit code 2.
struct DomainError : Error {
    using Error::Error;
};

struct DegreeCapExceeded : DomainError {
    using DomainError::DomainError;
};

struct IrrelevantPrime : DomainError {
    using DomainError::DomainError;
};

struct NotInAlcove : DomainError {
    using DomainError::DomainError;
};

// The Bockstein rule set does not determine the requested value; the caller
// must extend the catalog or fall back to a pinned lemma.
struct NotDefined : DomainError {
    using DomainError::DomainError;
};

// No witness exists within the rule set.
struct NotHit : Error {
    using Error::Error;
};

// Violated internal invariants: cross-route disagreement, failed recursion
// guards. CLI maps these to exit code 3.
struct InternalError : Error {
    using Error::Error;
};

struct ConsistencyFailure : InternalError {
    using InternalError::InternalError;
};

}  // namespace prequant
