#pragma once

#include <cmath>

#include "qbm/gaussian.hpp"

namespace qbm {

// One-parameter evolution kernel acting on characteristic functions:
//
//   chi_t(k, x) = exp(-gkk k^2 - gkx k x - gxx x^2) * chi_0(k0, x0),
//   (k0, x0) = (p11 k + p12 x, p21 k + p22 x).
//
// Both the free-particle and the harmonic-oscillator propagators reduce to
// this form; the pullback is the delta-measure argument of the Green's
// function and the quadratic factor is its Gaussian damping envelope.
struct EvolutionKernel {
    double t = 0.0;
    double gkk = 0.0, gkx = 0.0, gxx = 0.0;
    double p11 = 1.0, p12 = 0.0, p21 = 0.0, p22 = 1.0;

    cplx apply(const ChiFunction& chi0, double k, double x) const {
        const double k0 = p11 * k + p12 * x;
        const double x0 = p21 * k + p22 * x;
        const double damp = -(gkk * k * k + gkx * k * x + gxx * x * x);
        return std::exp(damp) * chi0(k0, x0);
    }

    // Exact composition for Gaussian states: substituting the linear
    // pullback into the exponent and adding the damping quadratic.
    GaussianChi apply(const GaussianChi& c) const {
        GaussianChi r;
        r.c1 = gkk + c.c1 * p11 * p11 + c.c2 * p11 * p21 + c.c3 * p21 * p21;
        r.c2 = gkx + 2.0 * c.c1 * p11 * p12 + c.c2 * (p11 * p22 + p12 * p21) +
               2.0 * c.c3 * p21 * p22;
        r.c3 = gxx + c.c1 * p12 * p12 + c.c2 * p12 * p22 + c.c3 * p22 * p22;
        r.c4 = c.c4 * p11 + c.c5 * p21;
        r.c5 = c.c4 * p12 + c.c5 * p22;
        r.c6 = c.c6;
        return r;
    }
};

}  // namespace qbm
