#pragma once

#include <complex>
#include <stdexcept>

// Special-function kernels used by the analytic wavefunctions and eigenvalue
// conditions: Gamma, Bessel J of real order, Airy Ai, Kummer 1F1 and Gauss
// 2F1.  Everything is evaluated from ascending power series with term-ratio
// stopping; asymptotic forms take over only where the series loses too many
// digits to cancellation (Airy beyond |x| ~ 8, Bessel beyond x ~ 16).
// Series are accumulated in extended precision so the cancellation budgets
// of the argument ranges the solvers use stay well inside the advertised
// tolerances.

namespace sumrules::specfun {

struct FnEvalResult {
    double value = 0.0;
    double abs_err_estimate = 0.0;
    int terms_used = 0;
    bool converged = true;
};

// Thrown for arguments at poles of the function (Gamma at non-positive
// integers, hypergeometrics with non-positive-integer denominator parameter).
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when a series or recurrence fails to meet tolerance in its budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gamma(x) for real x away from the poles at 0, -1, -2, ...
// Relative error < 1e-13 for |x| <= 50.
double gamma_fn(double x);

// log |Gamma(x)| with the sign of Gamma(x) returned separately.
double lgamma_signed(double x, int& sign);

// Gamma of a complex argument (Lanczos; reflection for Re z < 0.5).
std::complex<double> gamma_cplx(std::complex<double> z);
std::complex<double> lgamma_cplx(std::complex<double> z);

// Bessel function of the first kind, real order.
// Requires x >= 0.  Any real order is accepted on the series branch
// (x <= 16 or first-term-dominated); for larger x a backward-recurrence
// (Miller) evaluation is used and requires order >= 0 or a negative integer.
FnEvalResult bessel_j(double order, double x);

// d/dx J_nu(x), from J'_nu = (nu/x) J_nu - J_{nu+1}.  x > 0 (x == 0 allowed
// for integer nu).
FnEvalResult bessel_j_deriv(double order, double x);

// Airy function of the first kind and its derivative, |x| <= 50.
FnEvalResult airy_ai(double x);
FnEvalResult airy_ai_deriv(double x);

// Confluent hypergeometric 1F1(a; c; x).  c must not be a non-positive
// integer.  Terminates exactly when a is a non-positive integer.
FnEvalResult kummer_1f1(double a, double c, double x);

// Gauss hypergeometric 2F1(a, b; c; z) for z in [0, 1].  At z = 1 the Gauss
// summation formula is used and requires c - a - b > 0 unless the series
// terminates.  For z close to 1 the standard linear transformation in 1 - z
// is applied.
FnEvalResult gauss_2f1(double a, double b, double c, double z);

// 2F1 with complex parameters and real z in [0, 1).  Needed internally for
// potentials whose interior wavenumber makes the (1-y)-exponent imaginary
// (Woods-Saxon); the argument itself stays real.
std::complex<double> gauss_2f1_complex(std::complex<double> a,
                                       std::complex<double> b,
                                       std::complex<double> c, double z);

} // namespace sumrules::specfun
