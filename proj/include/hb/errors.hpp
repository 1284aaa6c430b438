#pragma once

#include <stdexcept>
#include <string>

namespace hb {

/// Argument sits on (or within 1e-12 of) a pole of Γ.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Result magnitude leaves the representable double range.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// Input outside the region where an integral or product converges.
struct ConvergenceError : std::domain_error {
    using std::domain_error::domain_error;
};

struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Operands built for different matrix sizes.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Requested rank is beyond what the exact engine is built for.
struct RankError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace hb
