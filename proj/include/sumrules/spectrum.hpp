#pragma once

#include "sumrules/potentials.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

// Bound-state energies: closed forms where known, bracketed root-finding on
// the transcendental eigenvalue conditions, and a Numerov shooting solver
// for everything else (and as the cross-check oracle for everything).

namespace sumrules {

enum class SolveMethod { closed_form, root_find, numerov };

struct NoBoundStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedFormError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundState {
    PotentialSpec potential;
    int n_r = 0;
    int l = 0;
    double P = 0.5;      // origin exponent
    double energy = 0.0; // natural units of the spec
    SolveMethod method = SolveMethod::closed_form;
};

// --- closed forms and eigencondition root-finds -----------------------------

// E_n = -m e^4 / (2 n^2 hbar^2), n >= 1 principal.
double coulomb_energy(const PotentialSpec& spec, int n);

// E = hbar w (2 n_r + l + 3/2), w = sqrt(2 V0 / m).
double oscillator_energy(const PotentialSpec& spec, int n_r, int l);

// j-th zero of Ai(-t) (t > 0, increasing), found by bracketing + Brent on
// the implemented Airy series.
double airy_neg_zero(int j);

// l = 0 only: E = (V0^2 hbar^2 / 2m)^{1/3} alpha_{n_r + 1}.
double linear_energy(const PotentialSpec& spec, int n_r);

// l = 0 only: order p > 0 with J_p(lambda) = 0, counted downward in p.
double exponential_bessel_order(const PotentialSpec& spec, int n_r);
double exponential_energy(const PotentialSpec& spec, int n_r);

// E = -m alpha^2 / (2 hbar^2 (1/2 + n_r + P)^2), standard branch.
double valence_electron_energy(const PotentialSpec& spec, int n_r, int l);

// E = hbar sqrt(2g/m) (2n + P + 1), standard branch.
double singular_oscillator_energy(const PotentialSpec& spec, int n, int l);

// l = 0 eigencondition root-find for hulthen / morse / woods_saxon.
double hypergeometric_energy(const PotentialSpec& spec, int n_r);

// Literature closed form for the Hulthen s-levels, used as an oracle:
// eps_n = (lambda^2 - n^2) / (2n), E = -hbar^2 eps_n^2 / (2 m a^2).
double hulthen_energy_closed(const PotentialSpec& spec, int n_r);

// Dimensionless residual of the defining eigencondition at the state's
// energy (|J_p(lam)|, |Ai|, |F| scaled by the off-eigenvalue magnitude).
double eigencondition_residual(const BoundState& state);

bool has_analytic_spectrum(const PotentialSpec& spec, int l);
BoundState solve_analytic(const PotentialSpec& spec, int n_r, int l);

// --- eigencondition parameter bundles ---------------------------------------
// Shared by the wavefunction builders and the integral identities.

struct ExponentialParams {
    double lambda, p, a;
    double arg_of_r(double r) const; // lambda e^{-r/2a}
};
ExponentialParams exponential_params(const PotentialSpec& spec, double energy);

struct HulthenParams {
    double eps, alf, bet, gam, a;
    double y_of_r(double r) const; // e^{-r/a}
};
HulthenParams hulthen_params(const PotentialSpec& spec, double energy);

struct MorseParams {
    double bet, gam, a_conf, c, y0, alpha, r0;
    double y_of_r(double r) const; // (2 gam / alpha) e^{-alpha (r-r0)/r0}
    double r_of_y(double y) const;
};
MorseParams morse_params(const PotentialSpec& spec, double energy);

struct WoodsSaxonParams {
    double nu, kappa, y0, a, R;
    std::complex<double> A, B, C, mu; // 2F1 parameters and (1-y) exponent
    double y_of_r(double r) const;    // 1 / (1 + e^{(r-R)/a})
    // unnormalized complex solution y^nu (1-y)^mu F(A,B;C;y)
    std::complex<double> u_complex(double r) const;
};
WoodsSaxonParams woods_saxon_params(const PotentialSpec& spec, double energy);

struct ValenceParams {
    double k, P; // k = sqrt(-8 m E) / hbar
};
ValenceParams valence_params(const PotentialSpec& spec, double energy, int l);

struct SingularOscParams {
    double eta, P; // eta = sqrt(2 m g) / hbar
};
SingularOscParams singular_osc_params(const PotentialSpec& spec, int l);

// --- Numerov shooting --------------------------------------------------------

struct NumerovResult {
    BoundState state;
    std::vector<double> r; // uniform grid
    std::vector<double> u; // reduced wavefunction (unnormalized, u > 0 at origin)
    double h = 0.0;
    int nodes = 0;
    // power-series seed u ~ r^{P+1/2}(1 + c1 r + c2 r^2 + c3 r^3), used
    // below r.front()
    double seed_c1 = 0.0, seed_c2 = 0.0, seed_c3 = 0.0;
};

// Node-count bisection on the reduced equation u'' = (2m/hbar^2)(V_eff - E) u,
// starting from the origin power law r^{P+1/2}.  Energy to 1e-8 absolute.
NumerovResult numerov_solve(const PotentialSpec& spec, int l, int n_r);

// Radius beyond which a bound state's density is negligible for quadrature
// (trailing WKB action ~ 25), and the local decay rate there.
double suggested_rmax(const PotentialSpec& spec, int l, double energy);
double tail_kappa(const PotentialSpec& spec, int l, double energy);

} // namespace sumrules
