#pragma once

#include <stdexcept>
#include <string>

namespace calabilab {

/// Invalid configuration, file format, or mismatched inputs.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mathematical precondition violated (nonpositive density, bad domain, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Kaehler positivity lost: min density / Hessian eigenvalue at or below the guard.
class PositivityError : public DomainError {
public:
    PositivityError(const std::string& msg, double minimum)
        : DomainError(msg), min_value(minimum) {}
    double min_value;
};

/// Operation not defined on the requested testbed.
class UnsupportedTestbedError : public std::runtime_error {
public:
    explicit UnsupportedTestbedError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Iterative method failed to converge or produced unusable output.
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace calabilab
