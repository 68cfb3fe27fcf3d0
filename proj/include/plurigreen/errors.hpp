#pragma once

#include <stdexcept>
#include <string>

namespace plurigreen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside its admissible range (|a| >= 1, negative weight, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Point dimension does not match the domain.
class DimensionMismatch : public InvalidParameter {
public:
    using InvalidParameter::InvalidParameter;
};

/// A point (or region) lies outside the open domain it must belong to.
class DomainViolation : public Error {
public:
    using Error::Error;
};

/// Pole/point geometry violates an operation's preconditions.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// A finite-difference stencil touched a -inf value.
class SingularStencil : public Error {
public:
    using Error::Error;
};

/// u(xi z) is -inf at every sample of the circle.
class DegenerateSlice : public Error {
public:
    using Error::Error;
};

/// Nothing left to evaluate after exclusions.
class EmptyGrid : public Error {
public:
    using Error::Error;
};

/// Malformed user input (JSON, complex literal, flag value).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace plurigreen
