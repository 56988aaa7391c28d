#include "sumrules/spectrum.hpp"

#include "sumrules/rootfind.hpp"
#include "sumrules/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sumrules {

using detail::brent;
using detail::scan_brackets;

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

double coulomb_energy(const PotentialSpec& spec, int n) {
    if (n < 1) throw std::domain_error("coulomb_energy: n >= 1");
    const Units& u = spec.units;
    const double e2 = spec.param("e2");
    return -u.m * e2 * e2 / (2.0 * n * n * u.hbar * u.hbar);
}

double oscillator_energy(const PotentialSpec& spec, int n_r, int l) {
    if (n_r < 0 || l < 0) throw std::domain_error("oscillator_energy: n_r, l >= 0");
    const Units& u = spec.units;
    const double omega = std::sqrt(2.0 * spec.param("v0") / u.m);
    return u.hbar * omega * (2.0 * n_r + l + 1.5);
}

double airy_neg_zero(int j) {
    if (j < 1) throw std::domain_error("airy_neg_zero: j >= 1");
    auto f = [](double t) { return specfun::airy_ai(-t).value; };
    // zeros are spaced ~pi/sqrt(t); scan far enough for the j-th
    const double tmax = std::pow(3.0 * 3.14159265358979324 * (4.0 * j + 3.0) / 8.0, 2.0 / 3.0) + 2.0;
    const auto brackets = scan_brackets(f, 0.5, tmax, int(tmax / 0.02));
    if (int(brackets.size()) < j)
        throw NoBoundStateError("airy_neg_zero: zero #" + std::to_string(j) + " not bracketed");
    return brent(f, brackets[j - 1].first, brackets[j - 1].second, 1e-14);
}

double linear_energy(const PotentialSpec& spec, int n_r) {
    if (n_r < 0) throw std::domain_error("linear_energy: n_r >= 0");
    const Units& u = spec.units;
    const double v0 = spec.param("v0");
    return std::cbrt(v0 * v0 * u.hbar * u.hbar / (2.0 * u.m)) * airy_neg_zero(n_r + 1);
}

// ---------------------------------------------------------------------------
// Exponential well: roots in the Bessel order
// ---------------------------------------------------------------------------

namespace {

double exponential_lambda(const PotentialSpec& spec) {
    const Units& u = spec.units;
    return std::sqrt(8.0 * u.m * spec.param("v0")) * spec.param("a") / u.hbar;
}

std::vector<double> exponential_order_roots(const PotentialSpec& spec) {
    const double lam = exponential_lambda(spec);
    auto f = [lam](double p) { return specfun::bessel_j(p, lam).value; };
    const auto brackets = scan_brackets(f, 1e-4, lam, std::max(200, int(lam / 0.01)));
    std::vector<double> roots;
    for (auto it = brackets.rbegin(); it != brackets.rend(); ++it)
        roots.push_back(brent(f, it->first, it->second, 1e-13));
    return roots; // descending in p: ground state first
}

} // namespace

double exponential_bessel_order(const PotentialSpec& spec, int n_r) {
    if (n_r < 0) throw std::domain_error("exponential_bessel_order: n_r >= 0");
    const auto roots = exponential_order_roots(spec);
    if (n_r >= int(roots.size()))
        throw NoBoundStateError("exponential well holds only " +
                                std::to_string(roots.size()) + " s-states at this depth");
    return roots[n_r];
}

double exponential_energy(const PotentialSpec& spec, int n_r) {
    const double p = exponential_bessel_order(spec, n_r);
    const Units& u = spec.units;
    const double a = spec.param("a");
    return -u.hbar * u.hbar * p * p / (8.0 * u.m * a * a);
}

// ---------------------------------------------------------------------------
// Soft-singular closed forms
// ---------------------------------------------------------------------------

double valence_electron_energy(const PotentialSpec& spec, int n_r, int l) {
    if (n_r < 0) throw std::domain_error("valence_electron_energy: n_r >= 0");
    const double P = origin_exponent(spec, l);
    const Units& u = spec.units;
    const double alpha = spec.param("alpha");
    const double denom = 0.5 + n_r + P;
    return -u.m * alpha * alpha / (2.0 * denom * denom * u.hbar * u.hbar);
}

double singular_oscillator_energy(const PotentialSpec& spec, int n, int l) {
    if (n < 0) throw std::domain_error("singular_oscillator_energy: n >= 0");
    const double P = origin_exponent(spec, l);
    const Units& u = spec.units;
    return u.hbar * std::sqrt(2.0 * spec.param("g") / u.m) * (2.0 * n + P + 1.0);
}

// ---------------------------------------------------------------------------
// Hypergeometric eigenconditions (l = 0)
// ---------------------------------------------------------------------------

HulthenParams hulthen_params(const PotentialSpec& spec, double energy) {
    const Units& u = spec.units;
    HulthenParams p;
    p.a = spec.param("a");
    p.eps = p.a * std::sqrt(-2.0 * u.m * energy) / u.hbar;
    const double lam2 = 2.0 * u.m * spec.param("v0") * p.a * p.a / (u.hbar * u.hbar);
    const double root = std::sqrt(p.eps * p.eps + lam2);
    p.alf = p.eps + root;
    p.bet = p.eps - root;
    p.gam = 2.0 * p.eps + 1.0;
    return p;
}

double HulthenParams::y_of_r(double r) const { return std::exp(-r / a); }

MorseParams morse_params(const PotentialSpec& spec, double energy) {
    const Units& u = spec.units;
    MorseParams p;
    p.alpha = spec.param("alpha");
    p.r0 = spec.param("r0");
    p.bet = p.r0 * std::sqrt(-2.0 * u.m * energy) / u.hbar;
    p.gam = p.r0 * std::sqrt(2.0 * u.m * spec.param("d")) / u.hbar;
    p.c = 2.0 * p.bet / p.alpha + 1.0;
    p.a_conf = 0.5 * p.c - p.gam / p.alpha;
    p.y0 = (2.0 * p.gam / p.alpha) * std::exp(p.alpha);
    return p;
}

double MorseParams::y_of_r(double r) const {
    return (2.0 * gam / alpha) * std::exp(-alpha * (r - r0) / r0);
}

double MorseParams::r_of_y(double y) const {
    return r0 * (1.0 - std::log(y * alpha / (2.0 * gam)) / alpha);
}

WoodsSaxonParams woods_saxon_params(const PotentialSpec& spec, double energy) {
    const Units& u = spec.units;
    WoodsSaxonParams p;
    p.a = spec.param("a");
    p.R = spec.param("R");
    p.nu = p.a * std::sqrt(-2.0 * u.m * energy) / u.hbar;
    p.kappa = p.a * std::sqrt(2.0 * u.m * (energy + spec.param("v0"))) / u.hbar;
    p.mu = std::complex<double>(0.0, p.kappa);
    p.A = p.mu + p.nu;
    p.B = p.mu + p.nu + 1.0;
    p.C = std::complex<double>(2.0 * p.nu + 1.0, 0.0);
    p.y0 = 1.0 / (1.0 + std::exp(-p.R / p.a));
    return p;
}

double WoodsSaxonParams::y_of_r(double r) const {
    const double t = (r - R) / a;
    return 1.0 / (1.0 + std::exp(t));
}

std::complex<double> WoodsSaxonParams::u_complex(double r) const {
    const double y = y_of_r(r);
    const std::complex<double> F = specfun::gauss_2f1_complex(A, B, C, y);
    const std::complex<double> pw =
        std::exp(mu * std::log(1.0 - y)) * std::pow(y, nu);
    return pw * F;
}

ValenceParams valence_params(const PotentialSpec& spec, double energy, int l) {
    const Units& u = spec.units;
    ValenceParams p;
    p.k = std::sqrt(-8.0 * u.m * energy) / u.hbar;
    p.P = origin_exponent(spec, l);
    return p;
}

SingularOscParams singular_osc_params(const PotentialSpec& spec, int l) {
    const Units& u = spec.units;
    SingularOscParams p;
    p.eta = std::sqrt(2.0 * u.m * spec.param("g")) / u.hbar;
    p.P = origin_exponent(spec, l);
    return p;
}

ExponentialParams exponential_params(const PotentialSpec& spec, double energy) {
    const Units& u = spec.units;
    ExponentialParams p;
    p.a = spec.param("a");
    p.lambda = exponential_lambda(spec);
    p.p = 2.0 * p.a * std::sqrt(-2.0 * u.m * energy) / u.hbar;
    return p;
}

double ExponentialParams::arg_of_r(double r) const {
    return lambda * std::exp(-r / (2.0 * a));
}

namespace {

// Eigencondition value as a function of E for the l = 0 hypergeometric trio.
double eigencondition_value(const PotentialSpec& spec, double E) {
    switch (spec.id) {
    case PotentialId::hulthen: {
        const auto p = hulthen_params(spec, E);
        return specfun::gauss_2f1(p.alf, p.bet, p.gam, 1.0).value;
    }
    case PotentialId::morse: {
        const auto p = morse_params(spec, E);
        return specfun::kummer_1f1(p.a_conf, p.c, p.y0).value;
    }
    case PotentialId::woods_saxon: {
        const auto p = woods_saxon_params(spec, E);
        const std::complex<double> w = p.u_complex(0.0);
        // Re and Im vanish together on shell; use the real part to bracket
        return w.real();
    }
    default:
        throw UnsupportedFormError("no hypergeometric eigencondition for " +
                                   to_string(spec.id));
    }
}

} // namespace

double hypergeometric_energy(const PotentialSpec& spec, int n_r) {
    if (n_r < 0) throw std::domain_error("hypergeometric_energy: n_r >= 0");
    double depth;
    switch (spec.id) {
    case PotentialId::hulthen: depth = 4.0 * spec.param("v0"); break; // eps scan cap below
    case PotentialId::morse: depth = spec.param("d"); break;
    case PotentialId::woods_saxon: depth = spec.param("v0"); break;
    default:
        throw UnsupportedFormError("no hypergeometric eigencondition for " +
                                   to_string(spec.id));
    }
    auto f = [&](double E) { return eigencondition_value(spec, E); };
    const double lo = -depth * (1.0 - 1e-9);
    const double hi = -depth * 1e-7;
    const auto brackets = scan_brackets(f, lo, hi, 2500);
    // scan ascending in E, so brackets are already ordered by n_r
    if (n_r >= int(brackets.size()))
        throw NoBoundStateError(to_string(spec.id) + " holds only " +
                                std::to_string(brackets.size()) +
                                " s-states at this depth");
    return brent(f, brackets[n_r].first, brackets[n_r].second, 1e-13);
}

double hulthen_energy_closed(const PotentialSpec& spec, int n_r) {
    const Units& u = spec.units;
    const double a = spec.param("a");
    const double lam2 = 2.0 * u.m * spec.param("v0") * a * a / (u.hbar * u.hbar);
    const double n = n_r + 1.0;
    if (lam2 <= n * n)
        throw NoBoundStateError("hulthen: no bound state at this depth for n_r = " +
                                std::to_string(n_r));
    const double eps = (lam2 - n * n) / (2.0 * n);
    return -u.hbar * u.hbar * eps * eps / (2.0 * u.m * a * a);
}

double eigencondition_residual(const BoundState& st) {
    const PotentialSpec& spec = st.potential;
    switch (spec.id) {
    case PotentialId::linear: {
        const Units& u = spec.units;
        const double s = std::cbrt(2.0 * u.m * spec.param("v0") / (u.hbar * u.hbar));
        return std::abs(specfun::airy_ai(-s * st.energy / spec.param("v0")).value);
    }
    case PotentialId::exponential: {
        const auto p = exponential_params(spec, st.energy);
        return std::abs(specfun::bessel_j(p.p, p.lambda).value);
    }
    case PotentialId::hulthen:
    case PotentialId::morse: {
        const double d = 1e-4 * std::abs(st.energy);
        const double f0 = std::abs(eigencondition_value(spec, st.energy));
        const double fs = std::max(std::abs(eigencondition_value(spec, st.energy - d)),
                                   std::abs(eigencondition_value(spec, st.energy + d)));
        return f0 / std::max(fs, 1e-300);
    }
    case PotentialId::woods_saxon: {
        const auto p = woods_saxon_params(spec, st.energy);
        const double d = 1e-4 * std::abs(st.energy);
        const double f0 = std::abs(p.u_complex(0.0));
        const double fs = std::max(
            std::abs(woods_saxon_params(spec, st.energy - d).u_complex(0.0)),
            std::abs(woods_saxon_params(spec, st.energy + d).u_complex(0.0)));
        return f0 / std::max(fs, 1e-300);
    }
    default:
        throw UnsupportedFormError("no eigencondition residual for " + to_string(spec.id));
    }
}

bool has_analytic_spectrum(const PotentialSpec& spec, int l) {
    switch (spec.id) {
    case PotentialId::coulomb:
    case PotentialId::oscillator:
    case PotentialId::valence_electron:
    case PotentialId::singular_oscillator:
        return true;
    case PotentialId::linear:
    case PotentialId::exponential:
    case PotentialId::hulthen:
    case PotentialId::morse:
    case PotentialId::woods_saxon:
        return l == 0;
    default:
        return false;
    }
}

BoundState solve_analytic(const PotentialSpec& spec, int n_r, int l) {
    if (n_r < 0 || l < 0)
        throw std::domain_error("solve_analytic: n_r, l >= 0");
    BoundState st;
    st.potential = spec;
    st.n_r = n_r;
    st.l = l;
    st.P = origin_exponent(spec, l);
    switch (spec.id) {
    case PotentialId::coulomb:
        st.energy = coulomb_energy(spec, n_r + l + 1);
        st.method = SolveMethod::closed_form;
        return st;
    case PotentialId::oscillator:
        st.energy = oscillator_energy(spec, n_r, l);
        st.method = SolveMethod::closed_form;
        return st;
    case PotentialId::linear:
        if (l != 0) break;
        st.energy = linear_energy(spec, n_r);
        st.method = SolveMethod::root_find;
        return st;
    case PotentialId::exponential:
        if (l != 0) break;
        st.energy = exponential_energy(spec, n_r);
        st.method = SolveMethod::root_find;
        return st;
    case PotentialId::hulthen:
    case PotentialId::morse:
    case PotentialId::woods_saxon:
        if (l != 0) break;
        st.energy = hypergeometric_energy(spec, n_r);
        st.method = SolveMethod::root_find;
        return st;
    case PotentialId::valence_electron:
        st.energy = valence_electron_energy(spec, n_r, l);
        st.method = SolveMethod::closed_form;
        return st;
    case PotentialId::singular_oscillator:
        st.energy = singular_oscillator_energy(spec, n_r, l);
        st.method = SolveMethod::closed_form;
        return st;
    default:
        break;
    }
    throw UnsupportedFormError("no analytic spectrum for " + to_string(spec.id) +
                               " at l = " + std::to_string(l));
}

// ---------------------------------------------------------------------------
// Numerov shooting
// ---------------------------------------------------------------------------

namespace {

struct Effective {
    const PotentialSpec* spec;
    double pfac;  // P^2 - 1/4
    double tmoh2; // 2m/hbar^2

    double w(double r, double E) const {
        return pfac / (r * r) + tmoh2 * (v_tail(*spec, r) - E);
    }
};

struct NumerovGrid {
    double r0 = 0.0; // first node
    double h = 0.0;
    int n = 0; // nodes r0 + i h, i = 0..n
    double rmax() const { return r0 + n * h; }
};

bool is_confining(const PotentialSpec& spec) {
    switch (spec.id) {
    case PotentialId::oscillator:
    case PotentialId::linear:
    case PotentialId::quarkonium:
    case PotentialId::singular_oscillator:
        return true;
    case PotentialId::power_law:
        return spec.param("k") > 0.0;
    case PotentialId::inv_square_plus_power:
        return spec.param("beta") > 0.0 && spec.param("g") > 0.0;
    default:
        return false;
    }
}

// effective potential (V + centrifugal incl. inverse-square) in energy units
double veff_exact(const Effective& eff, double r) {
    return eff.pfac / (eff.tmoh2 * r * r) + v_tail(*eff.spec, r);
}

double outer_turning_point(const Effective& eff, double E, double rcap) {
    // largest r with V_eff < E; geometric scan then refine
    double r_allowed = 0.0;
    double r = 1e-4;
    while (r < rcap) {
        if (veff_exact(eff, r) < E) r_allowed = r;
        r *= 1.03;
    }
    return r_allowed;
}

NumerovGrid make_grid(const PotentialSpec& spec, const Effective& eff, double P,
                      double E_hint, bool confining) {
    const double scale = length_scale(spec);
    // deepest effective potential sets the largest local wavenumber
    double vmin = 0.0;
    for (double r = 1e-3 * scale; r < 60.0 * scale; r *= 1.05)
        vmin = std::min(vmin, veff_exact(eff, r));
    const double kmax = std::sqrt(std::max(eff.tmoh2 * (E_hint - vmin),
                                           1.0 / (scale * scale)));
    NumerovGrid g;
    g.h = std::min(scale / 300.0, 0.15 / kmax);
    const double rcap = 4000.0 * scale;
    const double rturn = std::max(outer_turning_point(eff, E_hint, rcap), scale);
    double rmax;
    if (confining) {
        // extend past the turning point until the WKB tail action is large
        double action = 0.0;
        double r = rturn;
        const double dr = std::max(g.h, rturn / 200.0);
        while (action < 24.0 && r < rcap) {
            const double wloc = eff.w(r, E_hint);
            if (wloc > 0.0) action += std::sqrt(wloc) * dr;
            r += dr;
        }
        rmax = r + 2.0 * scale;
    } else {
        const double kappa = std::sqrt(std::max(eff.tmoh2 * (-E_hint), 1e-12));
        rmax = std::min(rturn + 24.0 / kappa + 10.0 * scale, rcap);
    }
    g.r0 = std::max(1e-6 * scale,
                    g.h * (2.0 + 2.5 * std::sqrt(std::max(0.0, P * P - 0.25))));
    g.n = int(std::ceil((rmax - g.r0) / g.h));
    if (g.n < 100 || g.n > 30'000'000)
        throw GridError("numerov grid size out of range: n = " + std::to_string(g.n));
    return g;
}

struct SeedCoeffs {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0, Q = 0.0;
    double operator()(double r) const {
        return std::pow(r, Q) * (1.0 + r * (c1 + r * (c2 + r * c3)));
    }
};

SeedCoeffs seed_coeffs(const PotentialSpec& spec, double P, double E) {
    SeedCoeffs s;
    s.Q = P + 0.5;
    const auto exp0 = origin_expansion(spec);
    const Units& u = spec.units;
    const double tmoh2 = 2.0 * u.m / (u.hbar * u.hbar);
    const double w1 = -tmoh2 * exp0.coulomb_strength;
    s.c1 = w1 / (2.0 * s.Q);
    const double w0 = tmoh2 * (exp0.tail_const - E);
    s.c2 = (w1 * s.c1 + w0) / (4.0 * s.Q + 2.0);
    const double w1p = tmoh2 * exp0.tail_prime_const;
    s.c3 = (w1 * s.c2 + w0 * s.c1 + w1p) / (6.0 * s.Q + 6.0);
    return s;
}

// outward Numerov integration; returns node count, optionally stores u
int integrate_outward(const Effective& eff, const NumerovGrid& g, double E,
                      const SeedCoeffs& seed, std::vector<double>* u_out,
                      int stop_index = -1) {
    const int last = (stop_index < 0) ? g.n : stop_index;
    const double h2 = g.h * g.h;
    double um = seed(g.r0);
    double u0 = seed(g.r0 + g.h);
    double wm = eff.w(g.r0, E);
    double w0 = eff.w(g.r0 + g.h, E);
    if (u_out) {
        u_out->assign(last + 1, 0.0);
        (*u_out)[0] = um;
        (*u_out)[1] = u0;
    }
    int nodes = 0;
    for (int i = 1; i < last; ++i) {
        const double r1 = g.r0 + (i + 1) * g.h;
        const double w1 = eff.w(r1, E);
        const double u1 = (2.0 * u0 * (1.0 + 5.0 * h2 * w0 / 12.0) -
                           um * (1.0 - h2 * wm / 12.0)) /
                          (1.0 - h2 * w1 / 12.0);
        if (u1 * u0 < 0.0) ++nodes;
        um = u0;
        u0 = u1;
        wm = w0;
        w0 = w1;
        if (std::abs(u0) > 1e250) {
            const double f = 1e-250;
            um *= f;
            u0 *= f;
            if (u_out)
                for (double& v : *u_out) v *= f;
        }
        if (u_out) (*u_out)[i + 1] = u0;
    }
    return nodes;
}

// inward Numerov from u(rmax) = 0 down to stop_index
void integrate_inward(const Effective& eff, const NumerovGrid& g, double E,
                      std::vector<double>& u, int stop_index) {
    const double h2 = g.h * g.h;
    u.assign(g.n + 1, 0.0);
    double up = 0.0;           // u_{i+1}
    double u0 = 1e-260;        // u_i at i = n-1
    u[g.n] = up;
    u[g.n - 1] = u0;
    double wp = eff.w(g.r0 + g.n * g.h, E);
    double w0 = eff.w(g.r0 + (g.n - 1) * g.h, E);
    for (int i = g.n - 1; i > stop_index; --i) {
        const double rm = g.r0 + (i - 1) * g.h;
        const double wmm = eff.w(rm, E);
        const double umm = (2.0 * u0 * (1.0 + 5.0 * h2 * w0 / 12.0) -
                            up * (1.0 - h2 * wp / 12.0)) /
                           (1.0 - h2 * wmm / 12.0);
        up = u0;
        u0 = umm;
        wp = w0;
        w0 = wmm;
        if (std::abs(u0) > 1e250) {
            const double f = 1e-250;
            up *= f;
            u0 *= f;
            for (int j = i; j <= g.n; ++j) u[j] *= f;
        }
        u[i - 1] = u0;
    }
}

} // namespace

double suggested_rmax(const PotentialSpec& spec, int l, double energy) {
    const Units& un = spec.units;
    const double P = origin_exponent(spec, l);
    const Effective eff{&spec, P * P - 0.25, 2.0 * un.m / (un.hbar * un.hbar)};
    const double scale = length_scale(spec);
    const double rcap = 40000.0 * scale;
    const double rturn = std::max(outer_turning_point(eff, energy, rcap), scale);
    if (is_confining(spec)) {
        double action = 0.0;
        double r = rturn;
        const double dr = rturn / 400.0;
        while (action < 26.0 && r < rcap) {
            const double wloc = eff.w(r, energy);
            if (wloc > 0.0) action += std::sqrt(wloc) * dr;
            r += dr;
        }
        return r + scale;
    }
    const double kappa = std::sqrt(std::max(eff.tmoh2 * (-energy), 1e-14));
    return std::min(rturn + 26.0 / kappa + 5.0 * scale, rcap);
}

double tail_kappa(const PotentialSpec& spec, int l, double energy) {
    const Units& un = spec.units;
    const double P = origin_exponent(spec, l);
    const Effective eff{&spec, P * P - 0.25, 2.0 * un.m / (un.hbar * un.hbar)};
    const double rmax = suggested_rmax(spec, l, energy);
    return std::sqrt(std::max(eff.w(rmax, energy), 1e-14));
}

NumerovResult numerov_solve(const PotentialSpec& spec, int l, int n_r) {
    if (n_r < 0 || l < 0) throw std::domain_error("numerov_solve: n_r, l >= 0");
    const Units& un = spec.units;
    const double P = origin_exponent(spec, l);
    Effective eff{&spec, P * P - 0.25, 2.0 * un.m / (un.hbar * un.hbar)};
    const bool confining = is_confining(spec);
    const double scale = length_scale(spec);
    const double escale = un.hbar * un.hbar / (2.0 * un.m * scale * scale);

    const int max_attempts = 12;
    double E_hint = confining ? escale * (4.0 * n_r + 2.0 * l + 3.0) : -escale;
    NumerovResult res;
    res.state.potential = spec;
    res.state.n_r = n_r;
    res.state.l = l;
    res.state.P = P;
    res.state.method = SolveMethod::numerov;

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const NumerovGrid g = make_grid(spec, eff, P, E_hint, confining);
        auto nodes_at = [&](double E) {
            const SeedCoeffs seed = seed_coeffs(spec, P, E);
            return integrate_outward(eff, g, E, seed, nullptr);
        };

        // lower edge: below the ground state
        double E_lo = confining ? 0.5 * escale : -2.0 * escale;
        {
            double vmin = 0.0;
            for (double r = 1e-3 * scale; r < 60.0 * scale; r *= 1.05)
                vmin = std::min(vmin, veff_exact(eff, r));
            if (std::isfinite(vmin) && vmin < 0.0) E_lo = vmin; // above -inf wells start here
        }
        int guard = 0;
        while (nodes_at(E_lo) > n_r) {
            E_lo = (E_lo < 0.0) ? 4.0 * E_lo : E_lo - 4.0 * escale;
            if (++guard > 40) throw GridError("numerov: cannot find lower energy bracket");
        }

        // upper edge
        double E_hi;
        bool rebuild = false;
        if (confining) {
            E_hi = std::max(E_hint, escale);
            guard = 0;
            while (nodes_at(E_hi) < n_r + 1) {
                E_hi = 2.0 * E_hi + escale;
                if (outer_turning_point(eff, E_hi, 4000.0 * scale) > 0.75 * g.rmax()) {
                    E_hint = E_hi;
                    rebuild = true;
                    break;
                }
                if (++guard > 60) throw GridError("numerov: cannot find upper energy bracket");
            }
            if (rebuild) continue;
        } else {
            // shallowest binding the box can resolve
            const double kappa_floor = 14.0 / (0.7 * g.rmax());
            E_hi = -kappa_floor * kappa_floor / eff.tmoh2;
            if (nodes_at(E_hi) < n_r + 1) {
                if (g.rmax() < 3900.0 * scale && attempt + 1 < max_attempts) {
                    // push the hint geometrically toward threshold so the box
                    // grows fast enough to resolve near-threshold states
                    E_hint = 0.25 * E_hi;
                    continue;
                }
                throw NoBoundStateError(to_string(spec.id) + ": no bound state with n_r = " +
                                        std::to_string(n_r) + " at l = " + std::to_string(l));
            }
        }

        // node-count bisection
        while (E_hi - E_lo > 1e-9 * std::max(1.0, std::abs(E_lo))) {
            const double mid = 0.5 * (E_lo + E_hi);
            if (nodes_at(mid) <= n_r) E_lo = mid;
            else E_hi = mid;
        }
        const double E = 0.5 * (E_lo + E_hi);

        // adequacy of the box for this state
        if (!confining) {
            const double kappa = std::sqrt(eff.tmoh2 * (-E));
            const double rturn = outer_turning_point(eff, E, g.rmax());
            if (kappa * (g.rmax() - rturn) < 23.0 && g.rmax() < 3900.0 * scale &&
                attempt + 1 < max_attempts) {
                E_hint = E;
                continue;
            }
        }

        // assemble the eigenfunction: outward to the outer turning point,
        // inward from the box edge, matched by value
        const double rturn = outer_turning_point(eff, E, g.rmax());
        int ic = int((rturn - g.r0) / g.h);
        ic = std::clamp(ic, 2, g.n - 2);
        const SeedCoeffs seed = seed_coeffs(spec, P, E);
        std::vector<double> uout, uin;
        integrate_outward(eff, g, E, seed, &uout, ic + 1);
        integrate_inward(eff, g, E, uin, std::max(0, ic - 1));
        // avoid matching on a node
        while (std::abs(uout[ic]) < 1e-12 * std::abs(uout[ic - 1]) && ic > 2) --ic;
        const double ratio = uout[ic] / uin[ic];

        res.r.resize(g.n + 1);
        res.u.resize(g.n + 1);
        for (int i = 0; i <= g.n; ++i) {
            res.r[i] = g.r0 + i * g.h;
            res.u[i] = (i <= ic) ? uout[i] : uin[i] * ratio;
        }
        res.h = g.h;
        res.state.energy = E;
        res.seed_c1 = seed.c1;
        res.seed_c2 = seed.c2;
        res.seed_c3 = seed.c3;
        res.nodes = 0;
        for (int i = 1; i < g.n; ++i)
            if (res.u[i] * res.u[i - 1] < 0.0) ++res.nodes;
        if (res.nodes != n_r)
            throw GridError("numerov: node count " + std::to_string(res.nodes) +
                            " != n_r = " + std::to_string(n_r) +
                            " (grid too coarse or box too small)");
        return res;
    }
    throw GridError("numerov: failed to stabilize the integration box");
}

} // namespace sumrules
