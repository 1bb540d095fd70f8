#pragma once

#include <stdexcept>
#include <string>

namespace selzeta {

// Bad input: violated precondition of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Request exceeds a configured ceiling (e.g. word length).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Object used before it was fully built.
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Floating point result is unusable.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoRealZeroError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class AuditFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// The truncation estimate is not established for these parameters.
class BoundNotProven : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace selzeta
