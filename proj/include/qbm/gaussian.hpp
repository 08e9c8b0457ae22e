#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qbm/errors.hpp"
#include "qbm/params.hpp"

namespace qbm {

using cplx = std::complex<double>;

// Gaussian characteristic function
//
//   chi(k, x) = exp(-c1 k^2 - c2 k x - c3 x^2 - i c4 k - i c5 x - c6)
//
// with real coefficients.  Units: c1 ~ 1/momentum^2, c2 ~ 1/(momentum*length),
// c3 ~ 1/length^2, c4 ~ 1/momentum, c5 ~ 1/length, c6 dimensionless.
// A physical (normalized) state has c6 = 0, so chi(0,0) = tr rho = 1, and
// hermiticity chi(-k,-x) = conj(chi(k,x)) holds automatically.
struct GaussianChi {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;
    double c5 = 0.0;
    double c6 = 0.0;

    cplx operator()(double k, double x) const {
        const double re = -(c1 * k * k + c2 * k * x + c3 * x * x + c6);
        const double im = -(c4 * k + c5 * x);
        return std::exp(re) * cplx(std::cos(im), std::sin(im));
    }

    // 1/e half-widths of |chi| along the two axes.
    double width_k() const { return 1.0 / std::sqrt(2.0 * c1); }
    double width_x() const { return 1.0 / std::sqrt(2.0 * c3); }
};

struct ValidationCheck {
    std::string name;
    bool ok = true;
    double measured = 0.0;
};

struct ValidationReport {
    bool pass = true;
    std::vector<ValidationCheck> checks;

    const ValidationCheck* failed(const std::string& name) const {
        for (const auto& c : checks)
            if (!c.ok && c.name == name) return &c;
        return nullptr;
    }
};

// Checks integrability (c1 > 0, c3 > 0, 4 c1 c3 - c2^2 > 0) and
// normalization (c6 = 0, up to a 1e-12 slack for round-off).
inline ValidationReport validate(const GaussianChi& c) {
    ValidationReport r;
    auto add = [&r](const std::string& name, bool ok, double measured) {
        r.checks.push_back({name, ok, measured});
        r.pass = r.pass && ok;
    };
    add("c1_positive", c.c1 > 0.0, c.c1);
    add("c3_positive", c.c3 > 0.0, c.c3);
    const double det = 4.0 * c.c1 * c.c3 - c.c2 * c.c2;
    add("positive_definite", det > 0.0, det);
    add("normalized", std::abs(c.c6) <= 1e-12, c.c6);
    bool finite = true;
    for (double v : {c.c1, c.c2, c.c3, c.c4, c.c5, c.c6}) finite = finite && std::isfinite(v);
    add("finite", finite, 0.0);
    return r;
}

// First and second moments of the state described by chi.
//
// The dictionary follows from differentiating chi(k,x) = tr(rho e^{i(kq+xp)/hbar})
// at the origin:
//   <q> = -hbar c4,   <p> = -hbar c5,
//   var q = 2 hbar^2 c1,  var p = 2 hbar^2 c3,  cov(q,p) = hbar^2 c2,
// where cov uses the symmetrized product <{q,p}>/2 - <q><p>.  The constants
// are frozen against a finite-difference oracle in the test suite.
struct Moments {
    double mean_q = 0.0;
    double mean_p = 0.0;
    double var_q = 0.0;
    double var_p = 0.0;
    double cov_qp = 0.0;
};

inline Moments moments(const GaussianChi& c, const ModelParams& p) {
    if (!validate(c).pass) throw invalid_state("moments: invalid GaussianChi");
    const double h2 = p.hbar * p.hbar;
    Moments m;
    m.mean_q = -p.hbar * c.c4;
    m.mean_p = -p.hbar * c.c5;
    m.var_q = 2.0 * h2 * c.c1;
    m.var_p = 2.0 * h2 * c.c3;
    m.cov_qp = h2 * c.c2;
    return m;
}

// A characteristic function given as an opaque evaluator, optionally tagged
// with the Gaussian coefficients it came from.  The tag lets downstream code
// (density-matrix inversion, window seeding) use closed forms.
class ChiFunction {
  public:
    ChiFunction() = default;
    ChiFunction(std::function<cplx(double, double)> f, std::optional<GaussianChi> g = std::nullopt)
        : fn_(std::move(f)), gauss_(g) {}
    ChiFunction(const GaussianChi& g)  // NOLINT: implicit by design
        : fn_([g](double k, double x) { return g(k, x); }), gauss_(g) {}

    cplx operator()(double k, double x) const { return fn_(k, x); }
    const std::optional<GaussianChi>& gaussian() const { return gauss_; }

    // d chi / dk and d chi / dx at the origin (used by the asymptotic
    // matrix-element formulas).  Falls back to central differences when no
    // Gaussian payload is attached.
    cplx dk0(double h = 1e-6) const {
        if (gauss_) return cplx(0.0, -gauss_->c4) * std::exp(-gauss_->c6);
        return (fn_(h, 0.0) - fn_(-h, 0.0)) / (2.0 * h);
    }
    cplx dx0(double h = 1e-6) const {
        if (gauss_) return cplx(0.0, -gauss_->c5) * std::exp(-gauss_->c6);
        return (fn_(0.0, h) - fn_(0.0, -h)) / (2.0 * h);
    }

  private:
    std::function<cplx(double, double)> fn_;
    std::optional<GaussianChi> gauss_;
};

// Convex mixture of characteristic functions (classical mixture of states).
// Weights should sum to 1 to keep chi(0,0) = 1.
inline ChiFunction mixture(std::vector<std::pair<double, ChiFunction>> parts) {
    return ChiFunction([parts = std::move(parts)](double k, double x) {
        cplx v = 0.0;
        for (const auto& [w, chi] : parts) v += w * chi(k, x);
        return v;
    });
}

// Draws a random valid Gaussian state with scales set by the thermal state
// of p.  Used by randomized sweeps and the test suites.
template <class Rng>
GaussianChi random_gaussian(Rng& rng, const ModelParams& p) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double c3n = p.thermal_c3();
    const double c1n = 1.0 / (4.0 * c3n * p.coherence_length() * p.coherence_length());
    GaussianChi c;
    c.c1 = c1n * std::exp(1.2 * u(rng));
    c.c3 = c3n * std::exp(1.2 * u(rng));
    c.c2 = 1.6 * u(rng) * std::sqrt(c.c1 * c.c3);  // keeps 4 c1 c3 - c2^2 > 0
    c.c4 = 1.5 * u(rng) * std::sqrt(c.c1);
    c.c5 = 1.5 * u(rng) * std::sqrt(c.c3);
    c.c6 = 0.0;
    return c;
}

}  // namespace qbm
