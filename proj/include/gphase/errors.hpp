#pragma once

#include <stdexcept>

namespace gphase {

// Numerical failure signals. Bad inputs throw std::invalid_argument instead.

// Wightman-function denominator came within 1e-12 of a pole; the caller
// must move the regulator.
struct pole_proximity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Extrapolation or iteration did not reach the requested tolerance.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root bracket contains no (or not exactly one) sign change.
struct bracket_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive ODE step size underflowed.
struct stiffness_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dissipator coefficient A <= 0; the atom is fully decoupled at this point
// (boundary-factor zero) and downstream phase integrals are undefined.
struct suppression_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gphase
