#pragma once

#include <stdexcept>
#include <string>

namespace reflectfit {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sizes, dimensions, or parameters that violate an operation's contract.
struct InvalidInput : Error {
    using Error::Error;
};

/// The eigen solver exhausted its sweep budget before the off-diagonal
/// norm dropped below tolerance. Carries the residual that remained.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& what, double residual_off_norm)
        : Error(what), residual(residual_off_norm) {}
    double residual;
};

/// The pair covariance vanished identically: every hyperplane fits equally
/// well, so reporting any single plane would be arbitrary.
struct DegenerateInput : Error {
    using Error::Error;
};

}  // namespace reflectfit
