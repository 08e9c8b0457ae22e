#pragma once

#include <cmath>

#include "qbm/kernels.hpp"
#include "qbm/params.hpp"

namespace qbm {

// Free-particle evolution data: Gamma_t = 1 - e^{-2 gamma t}, the Gaussian
// damping factor, and the pullback map
//   (k, x) -> (k, x e^{-2 gamma t} + Gamma_t k / (2 m gamma)).
struct FreeEvolution {
    double t = 0.0;
    double gamma_t = 0.0;  // 1 - e^{-2 gamma t}
    EvolutionKernel kernel;
};

inline FreeEvolution free_kernel(const ModelParams& p, double t) {
    p.check();
    if (!p.is_free()) throw wrong_potential("free_kernel: omega must be 0");
    if (t < 0.0) throw error("free_kernel: t must be >= 0");

    const double g = p.gamma;
    const double kT = p.kB * p.T;
    const double h2 = p.hbar * p.hbar;
    const double e2 = std::exp(-2.0 * g * t);
    const double e4 = e2 * e2;
    const double G = -std::expm1(-2.0 * g * t);  // Gamma_t, exact near t = 0

    // Momentum-sector decay rate; the gamma/(8 m kB T) piece is the
    // Lindblad-only minimally-invasive term.
    double rate_kk = kT / (2.0 * h2 * p.m * g);
    if (p.form == EquationForm::Lindblad) rate_kk += g / (8.0 * p.m * kT);

    FreeEvolution ev;
    ev.t = t;
    ev.gamma_t = G;
    ev.kernel.t = t;
    ev.kernel.gkk = rate_kk * t - kT * (G * G + 2.0 * G) / (8.0 * h2 * p.m * g * g);
    ev.kernel.gkx = kT * G * G / (2.0 * h2 * g);
    ev.kernel.gxx = p.m * kT * (1.0 - e4) / (2.0 * h2);
    ev.kernel.p11 = 1.0;
    ev.kernel.p12 = 0.0;
    ev.kernel.p21 = G / (2.0 * p.m * g);
    ev.kernel.p22 = e2;
    return ev;
}

// Closed-form coefficient evolution of a Gaussian state under the free
// Caldeira-Leggett master equation:
//   c1(t) = c1 + c2 G/(2mg) + c3 G^2/(4 m^2 g^2) - kT (G^2 + 2G)/(8 hbar^2 m g^2)
//           + (kT/(2 hbar^2 m g) [+ g/(8 m kT)]) t
//   c2(t) = c2 e^{-2gt} + c3 G e^{-2gt}/(mg) + kT G^2/(2 hbar^2 g)
//   c3(t) = m kT/(2 hbar^2) + (c3 - m kT/(2 hbar^2)) e^{-4gt}
//   c4(t) = c4 + c5 G/(2mg),  c5(t) = c5 e^{-2gt},  c6(t) = c6
// with G = Gamma_t.  The bracketed c1 rate term is dropped for the
// non-Lindblad form; all other coefficients are form-independent.
inline GaussianChi evolve_free_gaussian(const GaussianChi& chi0, const ModelParams& p, double t) {
    if (!validate(chi0).pass) throw invalid_state("evolve_free_gaussian: invalid initial state");
    if (!p.is_free()) throw wrong_potential("evolve_free_gaussian: omega must be 0");
    if (t < 0.0) throw error("evolve_free_gaussian: t must be >= 0");

    const double g = p.gamma;
    const double m = p.m;
    const double kT = p.kB * p.T;
    const double h2 = p.hbar * p.hbar;
    const double e2 = std::exp(-2.0 * g * t);
    const double e4 = e2 * e2;
    const double G = -std::expm1(-2.0 * g * t);
    const double c3inf = m * kT / (2.0 * h2);

    double rate = kT / (2.0 * h2 * m * g);
    if (p.form == EquationForm::Lindblad) rate += g / (8.0 * m * kT);

    GaussianChi c;
    c.c1 = chi0.c1 + chi0.c2 * G / (2.0 * m * g) + chi0.c3 * G * G / (4.0 * m * m * g * g) -
           kT * (G * G + 2.0 * G) / (8.0 * h2 * m * g * g) + rate * t;
    c.c2 = chi0.c2 * e2 + chi0.c3 * G * e2 / (m * g) + kT * G * G / (2.0 * h2 * g);
    c.c3 = c3inf + (chi0.c3 - c3inf) * e4;
    c.c4 = chi0.c4 + chi0.c5 * G / (2.0 * m * g);
    c.c5 = chi0.c5 * e2;
    c.c6 = chi0.c6;
    return c;
}

// Pointwise evolution, exact for arbitrary (possibly non-Gaussian) initial
// characteristic functions.
inline cplx evolve_free_pointwise(const ChiFunction& chi0, const ModelParams& p, double t,
                                  double k, double x) {
    return free_kernel(p, t).kernel.apply(chi0, k, x);
}

}  // namespace qbm
