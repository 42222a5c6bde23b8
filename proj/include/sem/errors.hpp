#pragma once

#include <stdexcept>
#include <string>

namespace sem
{

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// Division by a jet (or value) whose constant term vanishes.
class SingularPointError : public DomainError
{
public:
    using DomainError::DomainError;
};

/// Evaluation at the pole of the Hurwitz zeta function.
class PoleError : public DomainError
{
public:
    using DomainError::DomainError;
};

/// A fixed-size table or budget is too small for the request.
class CapacityError : public Error
{
public:
    using Error::Error;
};

/// Operation called with arguments that violate its contract.
class UsageError : public Error
{
public:
    using Error::Error;
};

/// Iterative method failed to reach its tolerance. Carries the best
/// value found and its error estimate.
class ConvergenceError : public Error
{
public:
    ConvergenceError(const std::string& what, double best_value, double error_estimate)
        : Error(what), best_value_(best_value), error_estimate_(error_estimate)
    {
    }

    double best_value() const noexcept { return best_value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_value_;
    double error_estimate_;
};

} // namespace sem
