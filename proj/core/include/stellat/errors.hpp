#pragma once

#include <stdexcept>
#include <string>

namespace stellat {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Elements of different dimension combined in one operation.
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

/// A certified bound could not be tightened to the requested tolerance
/// within the configured subdivision budget.
class ToleranceUnreachable : public Error {
public:
    explicit ToleranceUnreachable(const std::string& msg) : Error(msg) {}
};

/// Non-unital composition requires a series with zero constant term.
class NonzeroConstantTerm : public Error {
public:
    explicit NonzeroConstantTerm(const std::string& msg) : Error(msg) {}
};

/// The argument's norm bound reaches or exceeds the series radius.
class SeriesRadiusExceeded : public Error {
public:
    explicit SeriesRadiusExceeded(const std::string& msg) : Error(msg) {}
};

/// A state was applied to an element outside its domain.
class DomainMismatch : public Error {
public:
    explicit DomainMismatch(const std::string& msg) : Error(msg) {}
};

/// A structural invariant of an element type is violated.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& msg) : Error(msg) {}
};

/// Bad harness configuration (unknown suite, nonpositive tolerance, ...).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class UnknownSuite : public ConfigError {
public:
    explicit UnknownSuite(const std::string& msg) : ConfigError(msg) {}
};

} // namespace stellat
