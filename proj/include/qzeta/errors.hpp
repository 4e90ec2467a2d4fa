#pragma once

#include <stdexcept>
#include <string>

namespace qzeta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (convergence region, parameter range).
struct DomainError : Error {
    using Error::Error;
};

/// Evaluation point on (or too close to) a pole or singular set.
struct PoleError : Error {
    using Error::Error;
};

/// An extrapolation or iteration failed to settle below its tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

}  // namespace qzeta
