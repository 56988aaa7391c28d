#pragma once

#include "sumrules/wavefunctions.hpp"

#include <functional>

// Expectation values <g(r)> = int u^2 g dr with convergence guards at the
// origin, a power-law origin segment, and an exponential tail bound.

namespace sumrules {

struct DivergentMomentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_err_estimate = 0.0;
    int nodes = 0;
    bool converged = false;
};

struct MomentRequest {
    const RadialWavefunction* wf = nullptr;
    std::function<double(double)> integrand;  // g(r)
    double origin_power = 0.0;                // leading power of u^2 g at r -> 0
};

// Guarded quadrature.  Throws DivergentMomentError when origin_power <= -1
// (the boundary case is log-divergent and rejected), QuadFailure when the
// 1e-9 relative error target cannot be certified.  tol_factor < 1 tightens
// the target (used by the double-resolution cross-checks).
QuadratureResult expectation(const MomentRequest& req, double tol_factor = 1.0);

// <r^s> and its origin power 2P + 1 + s.
double origin_power_rs(const RadialWavefunction& wf, double s);
QuadratureResult moment_rs(const RadialWavefunction& wf, double s);

// Oscillator-only inversion: predicted <r^{-p-2}> from the quadrature <r^p>
// through the Gamma ratio (dimensionless oscillator units, scaled back).
double pasternak_invert(const RadialWavefunction& wf, double p);

// Valence-electron closed form <1/r^2> = k^2 / (2P (2 n_r + 2P + 1)).
double valence_r2_moment(const BoundState& state);

} // namespace sumrules
