#pragma once

#include <stdexcept>
#include <string>

namespace kuores {

// Base class for all mathematical errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInvertible : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Division over a non-field domain by a non-monic divisor.
struct UnsupportedDivision : Error {
    using Error::Error;
};

// Operands belong to different fields (wrong characteristic or modulus).
struct FieldMismatch : Error {
    using Error::Error;
};

// Arithmetic between polynomials in different variables.
struct VariableMismatch : Error {
    using Error::Error;
};

struct NotPrime : Error {
    using Error::Error;
};

struct ReducibleModulus : Error {
    using Error::Error;
};

struct DegenerateResultant : Error {
    using Error::Error;
};

struct DegenerateInput : Error {
    using Error::Error;
};

struct NonMonicInput : Error {
    using Error::Error;
};

// gcd(0, 0), newton polygon of 0, and similar.
struct UndefinedOperation : Error {
    using Error::Error;
};

// An implemented theorem was contradicted by a computation. Never expected;
// reaching this means either a bug or a genuine counterexample.
struct TheoremViolation : Error {
    using Error::Error;
};

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

} // namespace kuores
