#pragma once

#include <stdexcept>
#include <string>

namespace deg {

/// Raised when an input violates the hypotheses an operation relies on.
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a transformation's preconditions fail.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace deg
