#pragma once

#include <stdexcept>

namespace paor {

/// Shape mismatch (non-square input, incompatible dimensions, empty size).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Argument outside its documented range (tolerances, epsilons, counts).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input violates a documented structural precondition (non-Z-matrix,
/// non-unit diagonal, nonpositive diagonal, materially negative entries).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Pivot or diagonal entry below the singularity threshold.
struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Residual blow-up detected by an iterative solve.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested allocation would exceed the supported dense size.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// An internal cross-check failed; indicates a bug, not bad data.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace paor
