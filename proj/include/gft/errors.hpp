#pragma once

#include <stdexcept>
#include <string>

namespace gft {

// Base class for every numeric failure the library raises.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A series or iteration failed to reach its tolerance within the cap.
struct NonConvergent : NumericError {
    using NumericError::NumericError;
};

// Quadrature hit its refinement cap with residual above tolerance.
struct ToleranceNotMet : NumericError {
    using NumericError::NumericError;
};

// An intermediate value became non-finite.
struct PrecisionLoss : NumericError {
    using NumericError::NumericError;
};

// Arguments violate a documented precondition.
struct InvalidParams : NumericError {
    using NumericError::NumericError;
};

// A weight family constraint is violated (negative omega coefficients,
// non-positive parameters, degenerate branch).
struct InvalidWeight : NumericError {
    using NumericError::NumericError;
};

// The beta inversion hit I = 1 (beta -> +-inf).
struct SingularInversion : NumericError {
    using NumericError::NumericError;
};

// A tail integral is non-integrable for the requested evaluation.
struct DivergentTail : NumericError {
    using NumericError::NumericError;
};

// A functional's denominator vanished at the sample point.
struct ZeroDenominator : NumericError {
    using NumericError::NumericError;
};

// mu, nu would be complex: (alpha-gamma)^2 < 4 gamma.
struct ComplexRoots : InvalidParams {
    using InvalidParams::InvalidParams;
};

// mu, nu would be negative: alpha - gamma < 0 with gamma > 0.
struct NegativeRoots : InvalidParams {
    using InvalidParams::InvalidParams;
};

} // namespace gft
