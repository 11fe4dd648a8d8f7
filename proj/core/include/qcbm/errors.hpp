#pragma once

#include <stdexcept>

namespace qcbm {

/// A gate references a qubit outside the register, or an XX gate targets
/// the same qubit twice.
struct InvalidGateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// KL divergence requested for distributions where q(i)=0 on the support of p.
struct DivergenceError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Linear-algebra failure that survived jitter escalation (GP covariance not
/// positive definite).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qcbm
