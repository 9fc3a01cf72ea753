#pragma once

#include <stdexcept>
#include <string>

namespace linkpred {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameters or violated configuration invariants (CLI exit code 1).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent input data (CLI exit code 2).
class DataError : public Error {
public:
    using Error::Error;
};

/// Numeric failure: non-convergence, singular system (CLI exit code 3).
class NumericError : public Error {
public:
    using Error::Error;
};

} // namespace linkpred
