#pragma once

#include <stdexcept>
#include <string>

namespace tsmzv {

/// Bad argument shape: length mismatch, unknown vertex, out-of-range slice.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operand lies outside the subspace an operation is defined on.
struct SubspaceError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Expansion around a pole, or an edge factor with zero constant term.
struct SingularityError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A stated precondition failed (non-unit denominator, divergent index, ...).
struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Enumeration exceeded the configured work cap.
struct WorkLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tsmzv
