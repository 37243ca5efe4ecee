// errors.hpp — Exception types shared by all tdpt modules

#pragma once

#include <stdexcept>
#include <string>

namespace tdpt {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of a profile or function.
class DomainError : public Error {
public:
    using Error::Error;
};

// A parameter constraint required by a closed form does not hold.
class ConstraintViolation : public Error {
public:
    using Error::Error;
};

// Adaptive ODE integration could not make progress.
class IntegrationFailure : public Error {
public:
    IntegrationFailure(const std::string& what, double time)
        : Error(what + " (t = " + std::to_string(time) + ")"), time_(time) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

// Evaluation point where a formula divides by a vanishing coefficient.
class SingularPoint : public Error {
public:
    SingularPoint(const std::string& what, double time)
        : Error(what + " (t = " + std::to_string(time) + ")"), time_(time) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

// Decoupling requested at or beyond the exceptional point.
class ExceptionalPointError : public Error {
public:
    ExceptionalPointError(const std::string& what, double bound)
        : Error(what), bound_(bound) {}
    double bound() const noexcept { return bound_; }

private:
    double bound_;
};

class UnsupportedDegree : public Error {
public:
    using Error::Error;
};

// State or operator reaches outside the truncation-safe Fock subspace.
class TruncationError : public Error {
public:
    using Error::Error;
};

// Invalid configuration for the command-line driver.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace tdpt
