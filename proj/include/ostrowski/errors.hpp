#pragma once

#include <stdexcept>
#include <string>

namespace ostrowski {

// Base of all library errors; callers that only care about "this cell could
// not be evaluated" catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument lies outside the domain of a function or mean.
class DomainError : public Error {
public:
    using Error::Error;
};

// An evaluation produced (or would produce) inf/nan.
class NonFiniteValue : public Error {
public:
    using Error::Error;
};

// Invalid exponent bundle, grid size, tolerance, etc.
class ParamError : public Error {
public:
    using Error::Error;
};

}  // namespace ostrowski
