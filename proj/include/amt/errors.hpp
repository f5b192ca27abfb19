#pragma once

#include <stdexcept>
#include <string>

namespace amt {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad file contents, bad arguments, unknown cells,
// dimension mismatches. Maps to CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

// Mathematical validation failure: d^2 != 0, invalid matching, identity
// violation, engine disagreement. Maps to CLI exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace amt
