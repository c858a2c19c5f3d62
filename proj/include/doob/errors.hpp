#pragma once

#include <stdexcept>
#include <string>

namespace doob {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad parameters, out-of-range coordinates, malformed tables.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Two objects that must share D(m,n) parameters do not.
class ParameterMismatch : public Error {
public:
    using Error::Error;
};

/// A desk-scale size guard was exceeded.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// Input file could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed; the result would be wrong.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}
