#pragma once

#include <stdexcept>
#include <string>

namespace hsdirac {

// Base class for every error raised by the library. Each subclass names one
// failure mode so callers can catch narrowly.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotDominant : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

// An internal dimension identity failed; indicates a wrong selection rule.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class PoleArgument : public Error {
public:
    using Error::Error;
};

class NonIntegerMultiplicity : public Error {
public:
    using Error::Error;
};

// The product of (M - c_i I) over the predicted eigenvalues was not zero.
class AnnihilationFailure : public Error {
public:
    using Error::Error;
};

class DegenerateCasimir : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hsdirac
