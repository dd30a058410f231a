#pragma once

#include <stdexcept>
#include <string>

namespace hamlab {

// Input outside the documented domain of an operation.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Gadget graph does not have an exactly two-fold degenerate, gapped ground space.
struct GadgetInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degeneracy cut falls too close to an eigenvalue; caller should adjust the tolerance.
struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency check failed (never silently continued).
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

}  // namespace hamlab
