#pragma once

#include <stdexcept>
#include <string>

namespace magnus {

/// Input outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Argument is a pole of the gamma function.
struct GammaPoleError : DomainError {
    using DomainError::DomainError;
};

/// Branched argument outside the sector an evaluation is defined on.
struct SectorError : DomainError {
    using DomainError::DomainError;
};

/// Contour abscissa outside the strip allowed by a theorem.
struct StripError : DomainError {
    using DomainError::DomainError;
};

/// A theorem input that must be nonzero is zero.
struct ZeroInputError : DomainError {
    using DomainError::DomainError;
};

/// Series, recurrence or quadrature failed to reach the requested accuracy.
struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The contour integrand does not decay, so the integral does not exist.
struct NoDecayError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace magnus
