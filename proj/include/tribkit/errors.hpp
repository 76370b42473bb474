#pragma once

#include <stdexcept>
#include <string>

namespace tribkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact division that the mathematics guarantees turned out inexact.
/// Seeing this means a bug in an evaluator, never bad input.
class DivisibilityViolation : public Error {
public:
    using Error::Error;
};

class NegativeExponent : public Error {
public:
    using Error::Error;
};

/// The working precision of a Binet evaluation could not bound the rounding
/// error below the acceptance tolerance.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

class UnknownIdentity : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain an operation is defined on (e.g. m <= j in a sum).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace tribkit
