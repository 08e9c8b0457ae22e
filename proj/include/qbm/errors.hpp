#pragma once

#include <stdexcept>
#include <string>

namespace qbm {

// Base class for every error raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called with the wrong potential (free vs harmonic).
struct wrong_potential : error {
    using error::error;
};

// A Gaussian state failed validation where a valid one is required.
struct invalid_state : error {
    using error::error;
};

// A quantity that must be real carries a non-negligible imaginary part.
struct non_real_residue : error {
    using error::error;
};

// Quadrature window widening or subdivision failed to converge.
struct quadrature_error : error {
    using error::error;
};

// Grid integration exceeded the blow-up guard.
struct instability_error : error {
    using error::error;
};

// Adaptive ODE integration collapsed (step size underflow).
struct integrator_error : error {
    using error::error;
};

// A thermal reference does not match the model parameters.
struct incompatible_reference : error {
    using error::error;
};

// Decay fitting was asked to operate on unusable data.
struct fit_error : error {
    using error::error;
};

// Affine decoupling shift requested with a vanishing diagonal coefficient.
struct degenerate_shift : error {
    using error::error;
};

struct config_error : error {
    using error::error;
};

}  // namespace qbm
