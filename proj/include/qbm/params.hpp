#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "qbm/errors.hpp"

namespace qbm {

// Which form of the master equation drives the evolution.  The Lindblad
// form carries the extra momentum double-commutator damping term
// gamma/(8 m kB T) k^2; the non-Lindblad form lacks it.
enum class EquationForm { Lindblad, NonLindblad };

inline std::string to_string(EquationForm f) {
    return f == EquationForm::Lindblad ? "lindblad" : "nonlindblad";
}

// Physical parameters of the damped particle.  All quantities are plain
// positive reals in any self-consistent unit system; omega = 0 selects the
// free particle.  The cutoff Omega enters only through the validity ratios.
struct ModelParams {
    double m = 1.0;        // particle mass
    double gamma = 1.0;    // relaxation rate, 1/time
    double omega = 0.0;    // oscillator frequency, 1/time (0 = free)
    double T = 1.0;        // bath temperature
    double hbar = 1.0;
    double kB = 1.0;
    double Omega = 1.0e3;  // bath cutoff frequency, 1/time
    EquationForm form = EquationForm::Lindblad;

    // Natural-units preset: hbar = kB = m = 1.
    static ModelParams natural(double gamma, double omega, double T,
                               EquationForm form = EquationForm::Lindblad,
                               double Omega = 1.0e3) {
        ModelParams p;
        p.gamma = gamma;
        p.omega = omega;
        p.T = T;
        p.form = form;
        p.Omega = Omega;
        return p;
    }

    bool is_free() const { return omega == 0.0; }

    void check() const {
        if (!(m > 0.0) || !(gamma > 0.0) || !(T > 0.0) || !(hbar > 0.0) ||
            !(kB > 0.0) || !(Omega > 0.0) || !(omega >= 0.0))
            throw invalid_state("ModelParams: all fields must be positive (omega may be 0)");
        if (!std::isfinite(m) || !std::isfinite(gamma) || !std::isfinite(omega) ||
            !std::isfinite(T) || !std::isfinite(hbar) || !std::isfinite(kB) ||
            !std::isfinite(Omega))
            throw invalid_state("ModelParams: non-finite field");
    }

    // Recurring combinations.
    double thermal_c3() const { return m * kB * T / (2.0 * hbar * hbar); }
    double sigma_p() const { return std::sqrt(m * kB * T); }            // thermal momentum width
    double coherence_length() const { return hbar / std::sqrt(m * kB * T); }
};

// Markovianity / weak-coupling ratios.  Both must be small against
// min(hbar*Omega, 2*pi*kB*T) for the master equation to apply.
struct ValidityRatios {
    double r1 = 0.0;  // hbar*gamma / min(hbar*Omega, 2*pi*kB*T)
    double r2 = 0.0;  // hbar*omega / min(hbar*Omega, 2*pi*kB*T)
    double threshold = 0.1;
    bool warn = false;
};

inline ValidityRatios validity_ratios(const ModelParams& p, double threshold = 0.1) {
    p.check();
    const double scale = std::min(p.hbar * p.Omega, 2.0 * M_PI * p.kB * p.T);
    ValidityRatios v;
    v.r1 = p.hbar * p.gamma / scale;
    v.r2 = p.hbar * p.omega / scale;
    v.threshold = threshold;
    v.warn = v.r1 > threshold || v.r2 > threshold;
    return v;
}

}  // namespace qbm
