#pragma once

#include "sumrules/spectrum.hpp"

#include <functional>
#include <iosfwd>
#include <memory>

// Normalized radial wavefunctions (analytic where the catalog has them,
// interpolated shooting solutions otherwise) plus extraction of the origin
// coefficients that feed every surface term.

namespace sumrules {

enum class WavefunctionForm { analytic, numeric };
enum class OriginProvenance { closed_form, origin_fit };

struct FitDivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RadialWavefunction {
    BoundState state;
    WavefunctionForm form = WavefunctionForm::analytic;
    std::function<double(double)> u_raw; // unnormalized reduced function, r > 0
    double norm_scale = 1.0;             // u = norm_scale * u_raw
    double norm_integral = 0.0;          // int u_raw^2 dr over the support
    double r_max = 0.0;                  // quadrature support cutoff
    double kappa_tail = 0.0;             // decay rate at r_max
    bool normalized = true;

    // closed-form origin coefficient of the *normalized* wavefunction
    // (R ~ coeff * r^{P-1/2}), when the catalog provides one
    bool has_closed_coeff = false;
    double closed_coeff = 0.0;

    double u(double r) const { return norm_scale * u_raw(r); }
    double R(double r) const { return norm_scale * u_raw(r) / r; }
    double origin_exponent_R() const { return state.P - 0.5; }
};

struct OriginBehavior {
    double coeff = 0.0;    // C1 (regular) / a_st (soft-singular)
    double exponent = 0.0; // l or P - 1/2
    int deriv_order = 0;   // k of R^(k)(0)/k!
    OriginProvenance provenance = OriginProvenance::origin_fit;
};

// Assemble the analytic wavefunction for a catalog state; throws
// UnsupportedFormError where only the shooting solver applies (quarkonium,
// power-law, generic inverse-square-plus-power).
RadialWavefunction build_analytic(const BoundState& state);

// Wrap a Numerov solution: cubic interpolation between grid nodes, the
// power-law seed below the first node, quadrature normalization.
RadialWavefunction build_numeric(const NumerovResult& numerov);

// Analytic when available at this (potential, l), shooting otherwise.
RadialWavefunction build_wavefunction(const PotentialSpec& spec, int n_r, int l);

// Copy with the normalization deliberately rescaled (for the
// normalization-invariance checks).
RadialWavefunction with_scale(const RadialWavefunction& wf, double factor);

// Leading origin coefficient lim R(r)/r^{P-1/2}: closed form when the
// catalog has one, Richardson/Neville fit of the evaluator otherwise.
OriginBehavior origin_coefficient(const RadialWavefunction& wf);

// The limiting fit itself (always available; tests compare it with the
// closed form).  exponent is the R-power at the origin.
double origin_fit_coefficient(const RadialWavefunction& wf, double exponent);

// R^(k)(0)/k! via the same machinery; requires 2P = 2k+1 (which reduces to
// k = l for regular potentials).  Throws FitDivergenceError on a mismatched
// power or a non-stabilizing fit.
double origin_derivative_coefficient(const RadialWavefunction& wf, int k);

// (r, R(r)) table for plotting
void dump_wavefunction_csv(const RadialWavefunction& wf, std::ostream& os,
                           int npoints = 400, double rmax = 0.0);

} // namespace sumrules
