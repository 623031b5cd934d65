#pragma once

#include <stdexcept>

namespace ncosc {

// Input outside its mathematical domain (nonpositive mass, theta = 0, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// B*theta > hbar: the effective mass would turn complex.
struct ConstraintViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation called for the wrong field regime (e.g. kappa with B != 0).
struct CaseMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A filter legitimately removed every candidate.
struct EmptyResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested enumeration exceeds the configured state-count / size cap.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative eigenvalue extraction failed to converge.
struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite-difference grid cannot reach the requested accuracy.
struct GridTooCoarse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature did not meet its tolerance at maximal refinement.
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A residual sample point fell inside the guard band of a wavefunction node.
struct SingularSample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ncosc
