#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

// Panel-adaptive Gauss-Legendre integration.  Nodes and weights are computed
// at first use by Newton iteration on the Legendre recurrence, so there are
// no tabulated constants to mistype; a unit test pins polynomial exactness.

namespace sumrules::detail {

struct QuadFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_panels = 20000;
};

struct QuadOutcome {
    double value = 0.0;
    double abs_err = 0.0;
    double scale = 0.0; // largest panel magnitude: the error reference
    int evals = 0;
    bool converged = false;
};

struct QuadOutcomeC {
    std::complex<double> value{0.0, 0.0};
    double abs_err = 0.0;
    double scale = 0.0;
    int evals = 0;
    bool converged = false;
};

// Gauss-Legendre rule of order n on [-1, 1].
struct GaussLegendre {
    explicit GaussLegendre(int n);
    std::vector<double> x, w;
};

QuadOutcome integrate_adaptive(const std::function<double(double)>& f,
                               double a, double b, const QuadOptions& opt = {});

QuadOutcomeC integrate_adaptive_complex(
    const std::function<std::complex<double>(double)>& f,
    double a, double b, const QuadOptions& opt = {});

// Integral over [0, b] of f ~ t^q * (analytic) at t -> 0, q > -1: a cubic
// fit of f/t^q on [0, t0] integrated in closed form plus the adaptive rule
// on [t0, b].  Handles integrable endpoint singularities the panel rule
// cannot resolve.
QuadOutcome integrate_power_origin(const std::function<double(double)>& f,
                                   double q, double t0, double b,
                                   const QuadOptions& opt = {});

} // namespace sumrules::detail
