#pragma once

#include "sumrules/theorems.hpp"

#include <map>
#include <string>

// Numeric verification of the closed-form special-function integrals that
// follow from the boundary-corrected relations: the left sides are adaptive
// quadratures of the squared eigenfunctions, the right sides closed forms in
// Bessel / hypergeometric data at the on-shell parameters.
//
// Where the printed statements drop the squared solution weights or a
// normalization integral, the quadrature is run against the form the
// derivation actually produces; the report also carries the residual against
// the literally printed right side so the discrepancy stays visible.

namespace sumrules {

enum class IntegralId {
    bessel_main,     // int J_p^2(lam e^{-r/2a}) e^{-r/a} dr = a J'_p(lam)^2
    bessel_weighted, // the r-weighted version, with the normalization integral
    hulthen,         // Gauss-function well, force moment at the origin
    morse_potential, // confluent well, force moment
    morse_virial,    // confluent well, virial combination
    woods_saxon,     // complex-exponent well, force moment
};

std::string to_string(IntegralId id);
IntegralId integral_id_from_string(const std::string& name);

struct OffShellError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntegralOutcome {
    IntegralId id{};
    int n_r = 0;
    PotentialSpec spec;
    TheoremReport report;                // lhs/rhs moduli for the complex case
    double printed_form_residual = 0.0; // against the printed right side
    std::string printed_form_note;
};

// Spectrum-consistent default parameters for each identity (deep enough for
// at least two bound states).
PotentialSpec integral_default_potential(IntegralId id);

// Verify one identity at the n_r-th on-shell state.  Throws OffShellError if
// the eigenvalue condition is not met to 1e-8 first.
IntegralOutcome verify_identity(IntegralId id, int n_r,
                                const std::map<std::string, double>& overrides = {});

// Falsifiability control: perturb the on-shell parameter (the Bessel order /
// the energy parameter) by rel_perturbation and report the broken residual.
IntegralOutcome offshell_control(IntegralId id, int n_r,
                                 double rel_perturbation = 0.01,
                                 const std::map<std::string, double>& overrides = {});

} // namespace sumrules
