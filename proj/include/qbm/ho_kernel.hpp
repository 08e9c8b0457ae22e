#pragma once

#include <cmath>
#include <complex>

#include "qbm/free_propagator.hpp"
#include "qbm/kernels.hpp"
#include "qbm/params.hpp"

namespace qbm {

// Harmonic-oscillator evolution data.  mu = sqrt(gamma^2 - omega^2) is real
// for overdamped motion and imaginary for underdamped motion; everything is
// evaluated in complex arithmetic and converted to real by assertion, so a
// single code path covers both regimes including critical damping.
struct HOEvolution {
    double t = 0.0;
    cplx mu;                       // sqrt(gamma^2 - omega^2)
    cplx lambda_t;                 // 1 - e^{-2 mu t}
    double m1 = 0.0, m2 = 0.0, m3 = 0.0;
    EvolutionKernel kernel;
};

// Long-time limits of the damping exponents M_i.
struct MiAsymptotes {
    double m1, m2, m3;
};

inline MiAsymptotes mi_asymptotes(const ModelParams& p) {
    const double hg = p.hbar * p.gamma / (2.0 * p.kB * p.T);
    const double hw = p.hbar * p.omega / (4.0 * p.kB * p.T);
    const double hg2 = p.hbar * p.gamma / (p.kB * p.T);
    return {1.0 + hg * hg + hw * hw, -hg2 * hg2 / 8.0, 1.0 + hw * hw};
}

namespace detail {

using cplxL = std::complex<long double>;

// (e^z - 1)/z, series near 0.
inline cplxL phi1(cplxL z) {
    if (std::abs(z) < 1e-4L)
        return 1.0L + z / 2.0L + z * z / 6.0L + z * z * z / 24.0L + z * z * z * z / 120.0L;
    return (std::exp(z) - 1.0L) / z;
}

inline double assert_real(cplxL v, const char* what, double tol = 1e-10) {
    const long double scale = std::max<long double>(1.0L, std::abs(v.real()));
    if (std::abs(v.imag()) > tol * scale)
        throw non_real_residue(std::string("ho_kernel: imaginary residue in ") + what);
    return static_cast<double>(v.real());
}

}  // namespace detail

// Builds the harmonic-oscillator kernel at time t.
//
// The exponents are the exact closed forms
//   M1 = -[b1]/mu^2 - (hbar/(4 kB T))^2 [b1a]/mu^2
//   M2 = gamma^2 e^{-2(gamma-mu)t} Lambda_t^2/(2 mu^2) + (hbar gamma/(4 kB T))^2 [b2]/mu^2
//   M3 = [b3]/mu^2 - (hbar omega/(4 kB T))^2 [b1]/mu^2
// with brackets built from e^{-2 gamma t} cosh/sinh(2 mu t) and Gamma_t.
// They are evaluated here in an algebraically identical arrangement in which
// every bracket carries an explicit factor of mu^2,
//   [b1]/mu^2  = (E0 - 1) + 2 gamma^2 W + gamma V
//   [b3]/mu^2  = -(E0 - 1) - 2 gamma^2 W + gamma V
//   [b1a]/mu^2 = (4g^2 + w^2)(E0 - 1) + 2 g^2 (4g^2 - 3w^2) W + g (4g^2 - w^2) V
//   [b2]/mu^2  = 2 (E0 - 1) + 2 (2g^2 - w^2) W + 2 g V
//   e^{-2(g-mu)t} Lambda^2 / mu^2 = 4 W
// where E0 = e^{-2 gamma t}, W = E0 sinh^2(mu t)/mu^2 and V = E0 sinh(2 mu t)/mu.
// This removes the catastrophic cancellation at mu -> 0 and omega -> 0 and
// stays bounded for arbitrarily large gamma t; extended precision keeps the
// residual omega^2-level cancellation in M_i far below the 1e-10 gate.
inline HOEvolution ho_kernel(const ModelParams& p, double t) {
    using detail::cplxL;
    p.check();
    if (p.is_free()) throw wrong_potential("ho_kernel: omega must be > 0");
    if (t < 0.0) throw error("ho_kernel: t must be >= 0");

    const long double g = p.gamma, w = p.omega, tL = t;
    const long double mu2 = g * g - w * w;
    const cplxL mu = std::sqrt(cplxL(mu2, 0.0L));
    const cplxL mut = mu * tL;
    const long double E0 = std::exp(-2.0L * g * tL);

    cplxL W, V;
    if (std::abs(mut.real()) > 20.0L) {
        // Large real mu t: assemble from pure decaying exponentials.
        const cplxL Em = std::exp(-2.0L * (g - mu) * tL);
        const cplxL Ep = std::exp(-2.0L * (g + mu) * tL);
        W = (Em + Ep - 2.0L * E0) / (4.0L * mu2);
        V = (Em - Ep) / (2.0L * mu);
    } else {
        // sinh(mu t)/mu is regular at mu = 0.
        const cplxL sh = std::sinh(mut);
        const cplxL sh_ratio = (std::abs(mut) < 1e-8L)
                                   ? cplxL(tL) * (1.0L + mut * mut / 6.0L)
                                   : sh / mu;
        W = E0 * sh_ratio * sh_ratio;
        const cplxL sh2 = std::sinh(2.0L * mut);
        const cplxL sh2_ratio = (std::abs(mut) < 1e-8L)
                                     ? cplxL(2.0L * tL) * (1.0L + 4.0L * mut * mut / 6.0L)
                                     : sh2 / mu;
        V = E0 * sh2_ratio;
    }

    const long double hbar = p.hbar, kT = p.kB * p.T;
    const long double q = hbar * hbar / (16.0L * kT * kT);
    const cplxL e0m1 = cplxL(E0 - 1.0L);

    const cplxL b1 = e0m1 + 2.0L * g * g * W + g * V;
    const cplxL b3 = -e0m1 - 2.0L * g * g * W + g * V;
    const cplxL b1a = (4.0L * g * g + w * w) * e0m1 +
                      2.0L * g * g * (4.0L * g * g - 3.0L * w * w) * W +
                      g * (4.0L * g * g - w * w) * V;
    const cplxL b2 = 2.0L * e0m1 + 2.0L * (2.0L * g * g - w * w) * W + 2.0L * g * V;

    const cplxL M1 = -b1 - q * b1a;
    const cplxL M2 = 2.0L * g * g * W + q * g * g * b2;
    const cplxL M3 = b3 - q * w * w * b1;

    // Pullback map.  With L2 = Lambda_t/(2 mu) = t phi1(-2 mu t), the delta
    // arguments of the Green's function reduce to
    //   k0 = e^{-(g-mu)t} [ ((1+e^{-2mu t})/2 + g L2) k - m w^2 L2 x ]
    //   x0 = e^{-(g-mu)t} [ (L2/m) k + ((1+e^{-2mu t})/2 - g L2) x ]
    // which is free of the coth singularity at mu t -> 0.
    const cplxL em2 = std::exp(-2.0L * mut);
    const cplxL L2 = tL * detail::phi1(-2.0L * mut);
    const cplxL egm = std::exp(-(g - mu) * tL);
    const cplxL half = (1.0L + em2) / 2.0L;
    const cplxL P11 = egm * (half + g * L2);
    const cplxL P22 = egm * (half - g * L2);
    const cplxL P12 = -static_cast<long double>(p.m) * w * w * egm * L2;
    const cplxL P21 = egm * L2 / static_cast<long double>(p.m);

    HOEvolution ev;
    ev.t = t;
    ev.mu = cplx(static_cast<double>(mu.real()), static_cast<double>(mu.imag()));
    const cplxL lam = 1.0L - em2;
    ev.lambda_t = cplx(static_cast<double>(lam.real()), static_cast<double>(lam.imag()));
    ev.m1 = detail::assert_real(M1, "M1");
    ev.m2 = detail::assert_real(M2, "M2");
    ev.m3 = detail::assert_real(M3, "M3");

    const double kTd = p.kB * p.T, h2 = p.hbar * p.hbar;
    ev.kernel.t = t;
    ev.kernel.gkk = kTd * ev.m1 / (2.0 * h2 * p.m * p.omega * p.omega);
    ev.kernel.gkx = kTd * ev.m2 / (h2 * p.gamma);
    ev.kernel.gxx = p.m * kTd * ev.m3 / (2.0 * h2);
    ev.kernel.p11 = detail::assert_real(P11, "pullback");
    ev.kernel.p12 = detail::assert_real(P12, "pullback");
    ev.kernel.p21 = detail::assert_real(P21, "pullback");
    ev.kernel.p22 = detail::assert_real(P22, "pullback");
    return ev;
}

inline cplx evolve_ho_pointwise(const ChiFunction& chi0, const ModelParams& p, double t,
                                double k, double x) {
    return ho_kernel(p, t).kernel.apply(chi0, k, x);
}

inline GaussianChi evolve_ho_gaussian(const GaussianChi& chi0, const ModelParams& p, double t) {
    if (!validate(chi0).pass) throw invalid_state("evolve_ho_gaussian: invalid initial state");
    return ho_kernel(p, t).apply_gaussian(chi0);
}

// Potential-dispatching Gaussian evolution.
inline GaussianChi evolve_gaussian(const GaussianChi& chi0, const ModelParams& p, double t) {
    return p.is_free() ? evolve_free_gaussian(chi0, p, t) : evolve_ho_gaussian(chi0, p, t);
}

inline cplx evolve_pointwise(const ChiFunction& chi0, const ModelParams& p, double t, double k,
                             double x) {
    return p.is_free() ? evolve_free_pointwise(chi0, p, t, k, x)
                       : evolve_ho_pointwise(chi0, p, t, k, x);
}

// Maximum relative deviation between the harmonic-oscillator and the
// free-particle pointwise evolution of a reference Gaussian, sampled on an
// n x n grid within two widths of the state.  Converges as (omega/gamma)^2.
inline double free_limit_check(const ModelParams& p, double t, int n_samples = 5) {
    if (p.is_free()) throw wrong_potential("free_limit_check: omega must be > 0");
    ModelParams pf = p;
    pf.omega = 0.0;

    const double c3n = p.thermal_c3();
    const double l2 = p.coherence_length() * p.coherence_length();
    GaussianChi ref{1.0 / (4.0 * c3n * l2), 0.0, c3n, 0.0, 0.0, 0.0};
    ref.c2 = 0.3 * std::sqrt(ref.c1 * ref.c3);
    ref.c4 = 0.4 * std::sqrt(ref.c1);
    ref.c5 = -0.3 * std::sqrt(ref.c3);
    const ChiFunction chi(ref);

    const double kw = 2.0 * ref.width_k(), xw = 2.0 * ref.width_x();
    double max_rel = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        for (int j = 0; j < n_samples; ++j) {
            const double k = -kw + 2.0 * kw * i / (n_samples - 1);
            const double x = -xw + 2.0 * xw * j / (n_samples - 1);
            const cplx ho = evolve_ho_pointwise(chi, p, t, k, x);
            const cplx fr = evolve_free_pointwise(chi, pf, t, k, x);
            const double denom = std::max(std::abs(fr), 1e-300);
            max_rel = std::max(max_rel, std::abs(ho - fr) / denom);
        }
    }
    return max_rel;
}

}  // namespace qbm
