#include "sumrules/wavefunctions.hpp"

#include "sumrules/quadrature.hpp"
#include "sumrules/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

namespace sumrules {

namespace {

using specfun::gamma_fn;

double snap_to_integer(double x, const char* what, double tol = 1e-6) {
    const double r = std::round(x);
    if (std::abs(x - r) > tol)
        throw std::logic_error(std::string("expected near-integer ") + what + ", got " +
                               std::to_string(x));
    return r;
}

// quadrature normalization plus positive-leading-coefficient convention
void normalize(RadialWavefunction& wf) {
    detail::QuadOptions opt;
    opt.abs_tol = 1e-60;
    opt.rel_tol = 1e-11;
    opt.max_panels = 400000;
    const auto q = detail::integrate_adaptive(
        [&wf](double r) { const double u = wf.u_raw(r); return u * u; }, 0.0,
        wf.r_max, opt);
    if (!q.converged)
        throw detail::QuadFailure("wavefunction normalization did not converge");
    wf.norm_integral = q.value;
    wf.norm_scale = 1.0 / std::sqrt(q.value);
    const double probe = 2e-3 * length_scale(wf.state.potential);
    if (wf.u_raw(std::min(probe, 0.05 * wf.r_max)) < 0.0) wf.norm_scale = -wf.norm_scale;
    wf.normalized = true;
}

} // namespace

RadialWavefunction build_analytic(const BoundState& state) {
    const PotentialSpec& spec = state.potential;
    const Units& un = spec.units;
    RadialWavefunction wf;
    wf.state = state;
    wf.form = WavefunctionForm::analytic;
    wf.r_max = suggested_rmax(spec, state.l, state.energy);
    wf.kappa_tail = tail_kappa(spec, state.l, state.energy);

    switch (spec.id) {
    case PotentialId::coulomb: {
        const int n = state.n_r + state.l + 1, l = state.l, nr = state.n_r;
        const double B = 2.0 * un.m * spec.param("e2") / (un.hbar * un.hbar);
        const double Ctil = std::pow(B, 1.5) / (n * n * gamma_fn(2.0 * l + 2.0)) *
                            std::sqrt(gamma_fn(n + l + 1.0) / (2.0 * gamma_fn(n - l + 0.0)));
        const double Bn = B / n;
        wf.u_raw = [Ctil, Bn, l, nr](double r) {
            return Ctil * std::pow(Bn, l) * std::pow(r, l + 1) *
                   std::exp(-0.5 * Bn * r) *
                   specfun::kummer_1f1(-nr, 2.0 * l + 2.0, Bn * r).value;
        };
        wf.has_closed_coeff = true;
        wf.closed_coeff = Ctil * std::pow(Bn, l);
        break;
    }
    case PotentialId::oscillator: {
        const int l = state.l, nr = state.n_r;
        const double omega = std::sqrt(2.0 * spec.param("v0") / un.m);
        const double alpha = un.m * omega / un.hbar;
        wf.u_raw = [alpha, l, nr](double r) {
            return std::pow(r, l + 1) * std::exp(-0.5 * alpha * r * r) *
                   specfun::kummer_1f1(-nr, l + 1.5, alpha * r * r).value;
        };
        wf.has_closed_coeff = true;
        wf.closed_coeff =
            std::sqrt(2.0 * std::pow(alpha, l + 1.5) * gamma_fn(nr + l + 1.5) /
                      gamma_fn(nr + 1.0)) /
            gamma_fn(l + 1.5);
        break;
    }
    case PotentialId::linear: {
        if (state.l != 0)
            throw UnsupportedFormError("linear potential is analytic only at l = 0");
        const double cb =
            std::cbrt(2.0 * un.m * spec.param("v0") / (un.hbar * un.hbar));
        const double rE = state.energy / spec.param("v0");
        wf.u_raw = [cb, rE](double r) { return specfun::airy_ai(cb * (r - rE)).value; };
        wf.has_closed_coeff = true; // C1^2 = 2 m V0 / hbar^2 exactly
        wf.closed_coeff = std::sqrt(2.0 * un.m * spec.param("v0")) / un.hbar;
        break;
    }
    case PotentialId::exponential: {
        if (state.l != 0)
            throw UnsupportedFormError("exponential potential is analytic only at l = 0");
        const auto p = exponential_params(spec, state.energy);
        wf.u_raw = [p](double r) {
            return specfun::bessel_j(p.p, p.arg_of_r(r)).value;
        };
        break; // closed coefficient filled after normalization
    }
    case PotentialId::hulthen: {
        if (state.l != 0)
            throw UnsupportedFormError("hulthen potential is analytic only at l = 0");
        auto p = hulthen_params(spec, state.energy);
        p.bet = snap_to_integer(p.bet, "hulthen beta"); // on shell beta = -n
        wf.u_raw = [p](double r) {
            const double y = p.y_of_r(r);
            return std::pow(y, p.eps) *
                   specfun::gauss_2f1(p.alf, p.bet, p.gam, y).value;
        };
        break;
    }
    case PotentialId::morse: {
        if (state.l != 0)
            throw UnsupportedFormError("morse potential is analytic only at l = 0");
        const auto p = morse_params(spec, state.energy);
        wf.u_raw = [p](double r) {
            const double y = p.y_of_r(r);
            return std::pow(y, 0.5 * (p.c - 1.0)) * std::exp(-0.5 * y) *
                   specfun::kummer_1f1(p.a_conf, p.c, y).value;
        };
        break;
    }
    case PotentialId::woods_saxon: {
        if (state.l != 0)
            throw UnsupportedFormError("woods_saxon potential is analytic only at l = 0");
        const auto p = woods_saxon_params(spec, state.energy);
        // align the constant complex phase so the evaluator is real
        double best = -1.0;
        std::complex<double> wref;
        for (double frac : {0.3, 0.45, 0.6, 0.75, 0.9}) {
            const std::complex<double> w = p.u_complex(frac * p.R);
            if (std::abs(w) > best) {
                best = std::abs(w);
                wref = w;
            }
        }
        const std::complex<double> phase = wref / std::abs(wref);
        wf.u_raw = [p, phase](double r) {
            return (p.u_complex(r) / phase).real();
        };
        break;
    }
    case PotentialId::valence_electron: {
        const auto p = valence_params(spec, state.energy, state.l);
        const int nr = state.n_r;
        wf.u_raw = [p, nr](double r) {
            return std::pow(p.k * r, p.P - 0.5) * r * std::exp(-0.5 * p.k * r) *
                   specfun::kummer_1f1(-nr, 1.0 + 2.0 * p.P, p.k * r).value;
        };
        // normalization constant in closed form (Laguerre orthogonality)
        const double C1sq = std::pow(p.k, 3) * gamma_fn(2.0 * p.P + 1.0 + nr) /
                            (gamma_fn(nr + 1.0) * (2.0 * nr + 2.0 * p.P + 1.0)) /
                            (gamma_fn(2.0 * p.P + 1.0) * gamma_fn(2.0 * p.P + 1.0));
        wf.has_closed_coeff = true;
        wf.closed_coeff = std::sqrt(C1sq) * std::pow(p.k, p.P - 0.5);
        break;
    }
    case PotentialId::singular_oscillator: {
        const auto p = singular_osc_params(spec, state.l);
        const int n = state.n_r;
        wf.u_raw = [p, n](double r) {
            return std::pow(r, p.P + 0.5) * std::exp(-0.5 * p.eta * r * r) *
                   specfun::kummer_1f1(-n, 1.0 + p.P, p.eta * r * r).value;
        };
        wf.has_closed_coeff = true;
        wf.closed_coeff = std::sqrt(2.0 * std::pow(p.eta, p.P + 1.0) *
                                    gamma_fn(n + p.P + 1.0) / gamma_fn(n + 1.0)) /
                          gamma_fn(p.P + 1.0);
        break;
    }
    default:
        throw UnsupportedFormError("no analytic wavefunction for " + to_string(spec.id));
    }

    normalize(wf);

    // coefficients that are closed forms up to the shared numeric normalization
    const double ns = std::abs(wf.norm_scale);
    switch (spec.id) {
    case PotentialId::exponential: {
        const auto p = exponential_params(spec, state.energy);
        wf.has_closed_coeff = true;
        wf.closed_coeff =
            ns * p.lambda * std::abs(specfun::bessel_j_deriv(p.p, p.lambda).value) /
            (2.0 * p.a);
        break;
    }
    case PotentialId::hulthen: {
        auto p = hulthen_params(spec, state.energy);
        p.bet = snap_to_integer(p.bet, "hulthen beta");
        const double Fp1 = (p.alf * p.bet / p.gam) *
                           specfun::gauss_2f1(p.alf + 1.0, p.bet + 1.0, p.gam + 1.0, 1.0).value;
        wf.has_closed_coeff = true;
        wf.closed_coeff = ns * std::abs(Fp1) / p.a;
        break;
    }
    case PotentialId::morse: {
        const auto p = morse_params(spec, state.energy);
        const double Fp = (p.a_conf / p.c) *
                          specfun::kummer_1f1(p.a_conf + 1.0, p.c + 1.0, p.y0).value;
        wf.has_closed_coeff = true;
        wf.closed_coeff = ns * (p.alpha / p.r0) * std::pow(p.y0, 0.5 * (p.c + 1.0)) *
                          std::exp(-0.5 * p.y0) * std::abs(Fp);
        break;
    }
    case PotentialId::woods_saxon: {
        const auto p = woods_saxon_params(spec, state.energy);
        const std::complex<double> Fp =
            (p.A * p.B / p.C) *
            specfun::gauss_2f1_complex(p.A + 1.0, p.B + 1.0, p.C + 1.0, p.y0);
        const std::complex<double> up0 =
            -(1.0 / p.a) * std::pow(p.y0, p.nu + 1.0) *
            std::exp((p.mu + 1.0) * std::log(1.0 - p.y0)) * Fp;
        wf.has_closed_coeff = true;
        wf.closed_coeff = ns * std::abs(up0);
        break;
    }
    default:
        break;
    }
    return wf;
}

RadialWavefunction build_numeric(const NumerovResult& nres) {
    RadialWavefunction wf;
    wf.state = nres.state;
    wf.form = WavefunctionForm::numeric;
    const auto grid = std::make_shared<NumerovResult>(nres);
    const double r0 = grid->r.front();
    const double h = grid->h;
    const int n = int(grid->u.size()) - 1;
    const double Q = nres.state.P + 0.5;
    const double c1 = nres.seed_c1, c2 = nres.seed_c2, c3 = nres.seed_c3;
    auto seed = [Q, c1, c2, c3](double r) {
        return std::pow(r, Q) * (1.0 + r * (c1 + r * (c2 + r * c3)));
    };
    const double seed_r0 = seed(r0);
    const double u0 = grid->u.front();

    wf.u_raw = [grid, r0, h, n, seed, seed_r0, u0](double r) -> double {
        if (r <= r0) return u0 * seed(r) / seed_r0;
        const double t = (r - r0) / h;
        if (t >= n) return 0.0;
        int i = std::clamp(int(t), 1, n - 3);
        const double x = t - i;
        const auto& u = grid->u;
        // 4-point Lagrange on the uniform grid
        const double w0 = -x * (x - 1.0) * (x - 2.0) / 6.0;
        const double w1 = (x + 1.0) * (x - 1.0) * (x - 2.0) / 2.0;
        const double w2 = -(x + 1.0) * x * (x - 2.0) / 2.0;
        const double w3 = (x + 1.0) * x * (x - 1.0) / 6.0;
        return w0 * u[i - 1] + w1 * u[i] + w2 * u[i + 1] + w3 * u[i + 2];
    };
    wf.r_max = grid->r.back();
    wf.kappa_tail = tail_kappa(nres.state.potential, nres.state.l, nres.state.energy);
    normalize(wf);
    return wf;
}

RadialWavefunction build_wavefunction(const PotentialSpec& spec, int n_r, int l) {
    if (has_analytic_spectrum(spec, l)) {
        switch (spec.id) {
        case PotentialId::coulomb:
        case PotentialId::oscillator:
        case PotentialId::linear:
        case PotentialId::exponential:
        case PotentialId::hulthen:
        case PotentialId::morse:
        case PotentialId::woods_saxon:
        case PotentialId::valence_electron:
        case PotentialId::singular_oscillator:
            return build_analytic(solve_analytic(spec, n_r, l));
        default:
            break;
        }
    }
    return build_numeric(numerov_solve(spec, l, n_r));
}

RadialWavefunction with_scale(const RadialWavefunction& wf, double factor) {
    RadialWavefunction out = wf;
    out.norm_scale *= factor;
    out.normalized = false;
    return out;
}

double origin_fit_coefficient(const RadialWavefunction& wf, double exponent) {
    std::vector<double> xs, vs;
    if (wf.form == WavefunctionForm::analytic) {
        const double rbase = 1e-3 * length_scale(wf.state.potential);
        for (int j = 0; j < 6; ++j) {
            const double r = rbase * std::pow(0.5, j);
            xs.push_back(r);
            vs.push_back(wf.R(r) / std::pow(r, exponent));
        }
    } else {
        // sample the shooting grid itself, just above the seeded region
        const double r0 = 1e-3 * length_scale(wf.state.potential);
        for (int j = 5; j >= 0; --j) {
            const double r = std::max(r0 * (1 << j), r0);
            xs.push_back(r);
            vs.push_back(wf.R(r) / std::pow(r, exponent));
        }
    }
    // wrong exponent shows up as growth of the sampled ratios toward r -> 0
    double grow = std::abs(vs.back()) / std::max(1e-300, std::abs(vs.front()));
    if (grow > 16.0 || (std::abs(vs.front()) > 1e-12 && grow < 1.0 / 16.0))
        throw FitDivergenceError("origin fit: sampled R/r^e not stabilizing "
                                 "(wrong origin exponent?)");
    // Neville extrapolation to r = 0
    std::vector<double> T = vs;
    double prev = T[0];
    const int m = int(T.size());
    for (int j = 1; j < m; ++j) {
        for (int i = 0; i + j < m; ++i)
            T[i] = (xs[i + j] * T[i] - xs[i] * T[i + 1]) / (xs[i + j] - xs[i]);
        if (j == m - 2) prev = T[0];
    }
    const double tol = wf.form == WavefunctionForm::analytic ? 1e-7 : 1e-5;
    if (std::abs(T[0] - prev) > tol * std::max(1e-300, std::abs(T[0])) * 10.0)
        throw FitDivergenceError("origin fit: Neville levels did not stabilize");
    return T[0];
}

OriginBehavior origin_coefficient(const RadialWavefunction& wf) {
    OriginBehavior out;
    out.exponent = wf.origin_exponent_R();
    out.deriv_order = 0;
    if (wf.has_closed_coeff) {
        // closed coefficients refer to the normalized function; a rescaled
        // copy scales them along with it
        const double base = 1.0 / std::sqrt(wf.norm_integral);
        out.coeff = std::abs(wf.closed_coeff) * std::abs(wf.norm_scale) / base;
        out.provenance = OriginProvenance::closed_form;
        return out;
    }
    out.coeff = std::abs(origin_fit_coefficient(wf, out.exponent));
    out.provenance = OriginProvenance::origin_fit;
    return out;
}

double origin_derivative_coefficient(const RadialWavefunction& wf, int k) {
    if (k < 0) throw std::domain_error("origin_derivative_coefficient: k >= 0");
    const double P = wf.state.P;
    if (std::abs(2.0 * P - (2.0 * k + 1.0)) > 1e-9)
        throw FitDivergenceError(
            "origin derivative coefficient: R ~ r^{P-1/2} has no r^k leading term "
            "(requires 2P = 2k+1)");
    return origin_coefficient(wf).coeff;
}

void dump_wavefunction_csv(const RadialWavefunction& wf, std::ostream& os,
                           int npoints, double rmax) {
    if (rmax <= 0.0) rmax = wf.r_max;
    os << "r,R\n";
    char buf[80];
    for (int i = 1; i <= npoints; ++i) {
        const double r = rmax * double(i) / npoints;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", r, wf.R(r));
        os << buf;
    }
}

} // namespace sumrules
