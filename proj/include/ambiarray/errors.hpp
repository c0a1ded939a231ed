#pragma once

#include <stdexcept>
#include <string>

namespace ambiarray {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument values: out-of-range orders, bad angles, negative radii.
class DomainError : public Error {
public:
    using Error::Error;
};

// Mismatched matrix/vector shapes between operands.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Malformed or unreadable files and containers.
class IoError : public Error {
public:
    using Error::Error;
};

// A solver or decomposition failed (rank deficiency, no convergence where required).
class NumericalError : public Error {
public:
    using Error::Error;
};

// Bad user configuration (unknown preset names, inconsistent settings).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace ambiarray
