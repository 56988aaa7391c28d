#include "sumrules/theorems.hpp"

#include <cmath>
#include <sstream>

namespace sumrules {

namespace {

constexpr double kDeltaExact = 1e-12; // |condition| below this: delta fires
constexpr double kDeltaNear = 1e-6;   // below this: near-resonant, not applied

double scaled_residual(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

void finish(TheoremReport& rep, double lhs, double rhs, double tol) {
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.residual = scaled_residual(lhs, rhs);
    rep.tol = tol;
    rep.pass = rep.applicable && rep.residual <= tol;
}

TheoremReport not_applicable(TheoremReport rep, const std::string& why) {
    rep.applicable = false;
    rep.pass = false;
    rep.note = why;
    return rep;
}

// <r^s W'> with the potential-specific origin power
double mom_tail_prime(const RadialWavefunction& wf, double spow) {
    const auto ox = origin_expansion(wf.state.potential);
    MomentRequest req;
    req.wf = &wf;
    const PotentialSpec& spec = wf.state.potential;
    req.integrand = [&spec, spow](double r) {
        return std::pow(r, spow) * v_prime_tail(spec, r);
    };
    req.origin_power = 2.0 * wf.state.P + 1.0 + spow + ox.tail_prime_power;
    return expectation(req).value;
}

// <r^s W>
double mom_tail(const RadialWavefunction& wf, double spow) {
    const auto ox = origin_expansion(wf.state.potential);
    MomentRequest req;
    req.wf = &wf;
    const PotentialSpec& spec = wf.state.potential;
    req.integrand = [&spec, spow](double r) {
        return std::pow(r, spow) * v_tail(spec, r);
    };
    req.origin_power = 2.0 * wf.state.P + 1.0 + spow + ox.tail_power;
    return expectation(req).value;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

} // namespace

std::string to_string(IdentityId id) {
    switch (id) {
    case IdentityId::virial: return "virial";
    case IdentityId::hypervirial_s: return "hypervirial_s";
    case IdentityId::kramers_modified: return "kramers_modified";
    case IdentityId::ehrenfest: return "ehrenfest";
    case IdentityId::origin_density: return "origin_density";
    case IdentityId::khare: return "khare";
    case IdentityId::force_balance: return "force_balance";
    case IdentityId::oscillator_force_balance: return "oscillator_force_balance";
    case IdentityId::power_law_force_balance: return "power_law_force_balance";
    case IdentityId::linear_inv_cube: return "linear_inv_cube";
    case IdentityId::quarkonium_balance: return "quarkonium_balance";
    case IdentityId::soft_compensation: return "soft_compensation";
    case IdentityId::valence_spectrum: return "valence_spectrum";
    case IdentityId::sukumar_crosscheck: return "sukumar_crosscheck";
    }
    return "?";
}

double default_tolerance(const RadialWavefunction& wf) {
    return wf.form == WavefunctionForm::analytic ? 1e-6 : 1e-4;
}

SurfaceTerm surface_term(const RadialWavefunction& wf, double beta) {
    SurfaceTerm st;
    st.beta = beta;
    const double twoP = 2.0 * wf.state.P;
    if (twoP > beta + kDeltaExact) {
        st.kind = SurfaceCase::vanishes;
        st.value = 0.0;
        return st;
    }
    if (std::abs(twoP - beta) <= kDeltaExact) {
        const Units& un = wf.state.potential.units;
        const double coeff = origin_coefficient(wf).coeff;
        st.kind = SurfaceCase::finite;
        st.value = un.hbar * un.hbar * beta * coeff * coeff / (2.0 * un.m);
        return st;
    }
    st.kind = SurfaceCase::divergent;
    st.value = std::numeric_limits<double>::quiet_NaN();
    return st;
}

TheoremReport hypervirial_residual(const RadialWavefunction& wf, double s,
                                   double tol) {
    TheoremReport rep;
    rep.id = (s == 0.0) ? IdentityId::virial : IdentityId::hypervirial_s;
    rep.label = "hypervirial s = " + fmt(s);
    if (tol <= 0.0) tol = default_tolerance(wf);
    const Units& un = wf.state.potential.units;
    const double P = wf.state.P;
    const double E = wf.state.energy;
    const double tmoh2 = 2.0 * un.m / (un.hbar * un.hbar);

    // delta policy for the boundary right side (2P = -s)
    const double cond = 2.0 * P + s;
    const bool delta_active = std::abs(cond) < kDeltaExact;
    if (!delta_active && std::abs(cond) < kDeltaNear)
        return not_applicable(rep, "near-resonant boundary condition |2P+s| = " +
                                       fmt(std::abs(cond)) + ", identity not applied");

    try {
        const double m1 = mom_tail_prime(wf, s + 1.0);
        const double m2 = (s == -1.0) ? 0.0 : mom_tail(wf, s);
        const double m3 = (s == -1.0) ? 0.0 : moment_rs(wf, s).value;
        // coefficient of <r^{s-2}> factorized so it is exactly zero on shell
        const double c2 = 0.5 * s * (2.0 * P - s) * (2.0 * P + s);
        const double m4 = (std::abs(c2) < 1e-300) ? 0.0 : moment_rs(wf, s - 2.0).value;
        const double lhs = tmoh2 * (m1 + 2.0 * (s + 1.0) * (m2 - E * m3)) + c2 * m4;
        double rhs = 0.0;
        rep.pi.beta = -s;
        rep.pi.kind = SurfaceCase::vanishes;
        if (delta_active) {
            const double a = origin_coefficient(wf).coeff;
            rhs = 4.0 * P * P * a * a;
            rep.pi.kind = SurfaceCase::finite;
            rep.pi.value = rhs;
        }
        finish(rep, lhs, rhs, tol);
    } catch (const DivergentMomentError& err) {
        return not_applicable(rep, err.what());
    }
    return rep;
}

TheoremReport kramers_check(const RadialWavefunction& wf, double s, double tol) {
    TheoremReport rep;
    rep.id = IdentityId::kramers_modified;
    rep.label = "kramers s = " + fmt(s);
    if (tol <= 0.0) tol = default_tolerance(wf);
    if (wf.state.potential.id != PotentialId::coulomb)
        return not_applicable(rep, "kramers_check applies to the coulomb potential");
    const Units& un = wf.state.potential.units;
    const double e2 = wf.state.potential.param("e2");
    const int l = wf.state.l;
    const double E = wf.state.energy;

    const double cond = s + 1.0 + 2.0 * l;
    const bool delta_active = std::abs(cond) < kDeltaExact;
    if (!delta_active && std::abs(cond) < kDeltaNear)
        return not_applicable(rep, "near-resonant boundary condition, not applied");

    try {
        const double ms = moment_rs(wf, s).value;
        const double ms1 = moment_rs(wf, s - 1.0).value;
        // factorized so the coefficient vanishes exactly at s = -(2l+1)
        const double c2 =
            0.25 * s * (s - (2.0 * l + 1.0)) * (s + (2.0 * l + 1.0)) *
            un.hbar * un.hbar / un.m;
        const double m2 = (std::abs(c2) < 1e-300) ? 0.0 : moment_rs(wf, s - 2.0).value;
        const double lhs = 2.0 * E * (s + 1.0) * ms + e2 * (2.0 * s + 1.0) * ms1 + c2 * m2;
        double rhs = 0.0;
        rep.pi.beta = -s;
        rep.pi.kind = SurfaceCase::vanishes;
        if (delta_active) {
            const double Cl = origin_coefficient(wf).coeff;
            rhs = -(un.hbar * un.hbar / (2.0 * un.m)) * (2.0 * l + 1.0) *
                  (2.0 * l + 1.0) * Cl * Cl;
            rep.pi.kind = SurfaceCase::finite;
            rep.pi.value = rhs;
        }
        finish(rep, lhs, rhs, tol);
    } catch (const DivergentMomentError& err) {
        return not_applicable(rep, err.what());
    }
    return rep;
}

TheoremReport ehrenfest_balance(const RadialWavefunction& wf,
                                bool zero_pi_control, double tol) {
    TheoremReport rep;
    rep.id = IdentityId::ehrenfest;
    rep.label = zero_pi_control ? "ehrenfest (surface term dropped)" : "ehrenfest";
    if (tol <= 0.0) tol = default_tolerance(wf);
    const PotentialSpec& spec = wf.state.potential;
    const Units& un = spec.units;
    const int l = wf.state.l;

    rep.pi = surface_term(wf, 1.0);
    if (rep.pi.kind == SurfaceCase::divergent)
        return not_applicable(rep, "surface term diverges (2P < 1)");

    // centrifugal and inverse-square force pieces combined exactly:
    // l(l+1) hbar^2/m r^3 - V' = [l(l+1) - 2 m V0/hbar^2] hbar^2 / (m r^3) - W'
    const double acoef = l * (l + 1.0) -
                         2.0 * un.m * spec.v0_inverse_square / (un.hbar * un.hbar);
    const double ccent = acoef * un.hbar * un.hbar / un.m;
    const auto ox = origin_expansion(spec);
    MomentRequest req;
    req.wf = &wf;
    req.integrand = [&spec, ccent](double r) {
        return ccent / (r * r * r) - v_prime_tail(spec, r);
    };
    const double p_base = 2.0 * wf.state.P + 1.0;
    req.origin_power = (acoef == 0.0)
        ? p_base + ox.tail_prime_power
        : std::min(p_base - 3.0, p_base + ox.tail_prime_power);
    try {
        const double balance = expectation(req).value;
        const double pi_val = zero_pi_control ? 0.0 : rep.pi.value;
        finish(rep, balance + pi_val, 0.0, tol);
    } catch (const DivergentMomentError& err) {
        return not_applicable(rep, err.what());
    }
    return rep;
}

TheoremReport origin_density_relation(const RadialWavefunction& wf, double tol) {
    TheoremReport rep;
    rep.id = IdentityId::origin_density;
    rep.label = "origin density";
    if (tol <= 0.0) tol = default_tolerance(wf);
    const PotentialSpec& spec = wf.state.potential;
    const Units& un = spec.units;
    const bool regular_l0 = spec.cls == PotentialClass::regular && wf.state.l == 0;
    const bool soft_2p1 = spec.cls == PotentialClass::soft_singular &&
                          std::abs(2.0 * wf.state.P - 1.0) < kDeltaExact;
    if (!regular_l0 && !soft_2p1)
        return not_applicable(rep, "requires l = 0 (regular) or 2P = 1 (soft-singular)");
    try {
        const double a = origin_coefficient(wf).coeff;
        const double lhs = a * a;
        const double rhs =
            (2.0 * un.m / (un.hbar * un.hbar)) * mom_tail_prime(wf, 0.0);
        rep.pi = surface_term(wf, 1.0);
        finish(rep, lhs, rhs, tol);
    } catch (const DivergentMomentError& err) {
        return not_applicable(rep, err.what());
    }
    return rep;
}

TheoremReport khare_check(const RadialWavefunction& wf, int k, double tol) {
    TheoremReport rep;
    rep.id = IdentityId::khare;
    rep.label = "khare k = " + std::to_string(k);
    if (tol <= 0.0) tol = default_tolerance(wf);
    const Units& un = wf.state.potential.units;
    const double P = wf.state.P;
    const double E = wf.state.energy;

    const double cond = 2.0 * P - (2.0 * k + 1.0);
    if (std::abs(cond) >= kDeltaExact) {
        if (std::abs(cond) < kDeltaNear)
            return not_applicable(rep, "near-resonant |2P - (2k+1)|, not applied");
        return not_applicable(rep, "requires 2P = 2k+1 (k = l for regular potentials)");
    }
    try {
        const double ak = origin_derivative_coefficient(wf, k);
        double kfac = 1.0;
        for (int j = 2; j <= k; ++j) kfac *= j;
        const double lhs =
            (2.0 * k + 1.0) * (2.0 * k + 1.0) * kfac * kfac * ak * ak;
        const double tmoh2 = 2.0 * un.m / (un.hbar * un.hbar);
        double bracket = mom_tail_prime(wf, -2.0 * k);
        if (k > 0)
            bracket += 4.0 * k *
                       (E * moment_rs(wf, -2.0 * k - 1.0).value -
                        mom_tail(wf, -2.0 * k - 1.0));
        const double rhs = kfac * kfac * tmoh2 * bracket;
        finish(rep, lhs, rhs, tol);
    } catch (const DivergentMomentError& err) {
        return not_applicable(rep, err.what());
    }
    return rep;
}

std::vector<TheoremReport> structural_relations(const RadialWavefunction& wf,
                                                double tol) {
    if (tol <= 0.0) tol = default_tolerance(wf);
    const PotentialSpec& spec = wf.state.potential;
    const Units& un = spec.units;
    const int l = wf.state.l;
    std::vector<TheoremReport> out;

    auto push_force_balance = [&](IdentityId id, const std::string& label,
                                  double lhs_value, bool lhs_known) {
        TheoremReport rep;
        rep.id = id;
        rep.label = label;
        try {
            const double rhs =
                un.hbar * un.hbar * l * (l + 1.0) / un.m * moment_rs(wf, -3.0).value;
            const double lhs = lhs_known ? lhs_value : mom_tail_prime(wf, 0.0);
            finish(rep, lhs, rhs, tol);
        } catch (const DivergentMomentError& err) {
            rep = not_applicable(rep, err.what());
        }
        out.push_back(rep);
    };

    if (spec.cls == PotentialClass::regular && l > 0) {
        push_force_balance(IdentityId::force_balance, "<dV/dr> vs centrifugal", 0.0,
                           false);
        switch (spec.id) {
        case PotentialId::oscillator: {
            TheoremReport rep;
            rep.id = IdentityId::oscillator_force_balance;
            rep.label = "2 V0 <r> vs centrifugal";
            try {
                const double lhs = 2.0 * spec.param("v0") * moment_rs(wf, 1.0).value;
                const double rhs = un.hbar * un.hbar * l * (l + 1.0) / un.m *
                                   moment_rs(wf, -3.0).value;
                finish(rep, lhs, rhs, tol);
            } catch (const DivergentMomentError& err) {
                rep = not_applicable(rep, err.what());
            }
            out.push_back(rep);
            break;
        }
        case PotentialId::power_law: {
            TheoremReport rep;
            rep.id = IdentityId::power_law_force_balance;
            rep.label = "k V0 <r^{k-1}> vs centrifugal";
            try {
                const double k = spec.param("k");
                const double lhs =
                    k * spec.param("v0") * moment_rs(wf, k - 1.0).value;
                const double rhs = un.hbar * un.hbar * l * (l + 1.0) / un.m *
                                   moment_rs(wf, -3.0).value;
                finish(rep, lhs, rhs, tol);
            } catch (const DivergentMomentError& err) {
                rep = not_applicable(rep, err.what());
            }
            out.push_back(rep);
            break;
        }
        case PotentialId::linear: {
            TheoremReport rep;
            rep.id = IdentityId::linear_inv_cube;
            rep.label = "<1/r^3> = m V0 / (hbar^2 l(l+1))";
            try {
                const double lhs = moment_rs(wf, -3.0).value;
                const double rhs = un.m * spec.param("v0") /
                                   (un.hbar * un.hbar * l * (l + 1.0));
                finish(rep, lhs, rhs, tol);
            } catch (const DivergentMomentError& err) {
                rep = not_applicable(rep, err.what());
            }
            out.push_back(rep);
            break;
        }
        case PotentialId::quarkonium: {
            TheoremReport rep;
            rep.id = IdentityId::quarkonium_balance;
            rep.label = "V0 + alpha <1/r^2> vs centrifugal";
            try {
                const double lhs = spec.param("v0") +
                                   spec.param("alpha") * moment_rs(wf, -2.0).value;
                const double rhs = un.hbar * un.hbar * l * (l + 1.0) / un.m *
                                   moment_rs(wf, -3.0).value;
                finish(rep, lhs, rhs, tol);
            } catch (const DivergentMomentError& err) {
                rep = not_applicable(rep, err.what());
            }
            out.push_back(rep);
            break;
        }
        default:
            break;
        }
    }

    if (spec.cls == PotentialClass::soft_singular &&
        std::abs(2.0 * wf.state.P - 1.0) < kDeltaExact) {
        TheoremReport rep;
        rep.id = IdentityId::soft_compensation;
        switch (spec.id) {
        case PotentialId::inv_square_plus_power:
            rep.label = "beta g <r^{beta-1}> = a_st^2 hbar^2 / 2m";
            break;
        case PotentialId::valence_electron:
            rep.label = "alpha <1/r^2> = a_st^2 hbar^2 / 2m";
            break;
        case PotentialId::singular_oscillator:
            rep.label = "2 g <r> = a_st^2 hbar^2 / 2m";
            break;
        default:
            rep.label = "<dW/dr> = a_st^2 hbar^2 / 2m";
            break;
        }
        try {
            const double lhs = mom_tail_prime(wf, 0.0);
            const double a = origin_coefficient(wf).coeff;
            const double rhs = a * a * un.hbar * un.hbar / (2.0 * un.m);
            rep.pi = surface_term(wf, 1.0);
            finish(rep, lhs, rhs, tol);
        } catch (const DivergentMomentError& err) {
            rep = not_applicable(rep, err.what());
        }
        out.push_back(rep);

        if (spec.id == PotentialId::valence_electron) {
            TheoremReport vs;
            vs.id = IdentityId::valence_spectrum;
            vs.label = "standard-branch level formula";
            const double alpha = spec.param("alpha");
            const double nr1 = wf.state.n_r + 1.0;
            const double rhs =
                -un.m * alpha * alpha / (2.0 * nr1 * nr1 * un.hbar * un.hbar);
            finish(vs, wf.state.energy, rhs, tol);
            out.push_back(vs);
        }
    }
    return out;
}

TheoremReport sukumar_residual(const RadialWavefunction& wf, double j, double tol) {
    TheoremReport rep;
    rep.id = IdentityId::sukumar_crosscheck;
    rep.label = "recurrence in the j = s+1 convention, j = " + fmt(j);
    if (tol <= 0.0) tol = default_tolerance(wf);
    const PotentialSpec& spec = wf.state.potential;
    if (spec.cls != PotentialClass::regular)
        return not_applicable(rep, "coded for regular potentials only");
    const Units& un = spec.units;
    const int l = wf.state.l;
    const double E = wf.state.energy;
    const double tmoh2 = 2.0 * un.m / (un.hbar * un.hbar);
    try {
        MomentRequest mvp;
        mvp.wf = &wf;
        mvp.integrand = [&spec, j](double r) {
            return std::pow(r, j) * v_prime(spec, r);
        };
        mvp.origin_power =
            2.0 * wf.state.P + 1.0 + j + origin_expansion(spec).tail_prime_power;
        const double t1 = expectation(mvp).value;

        double t2 = 0.0;
        if (j != 0.0) {
            MomentRequest mv;
            mv.wf = &wf;
            mv.integrand = [&spec, j](double r) {
                return std::pow(r, j - 1.0) * v(spec, r);
            };
            mv.origin_power =
                2.0 * wf.state.P + j + origin_expansion(spec).tail_power;
            t2 = expectation(mv).value - E * moment_rs(wf, j - 1.0).value;
        }
        const double twol1 = 2.0 * l + 1.0;
        const double c2 = 0.5 * (j - 1.0) * (twol1 - (j - 1.0)) * (twol1 + (j - 1.0));
        const double m4 =
            (std::abs(c2) < 1e-300) ? 0.0 : moment_rs(wf, j - 3.0).value;
        const double lhs = tmoh2 * (t1 + 2.0 * j * t2) + c2 * m4;
        double rhs = 0.0;
        if (std::abs(j + 2.0 * l) < kDeltaExact) {
            const double Cl = origin_coefficient(wf).coeff;
            rhs = twol1 * twol1 * Cl * Cl;
        }
        finish(rep, lhs, rhs, tol);
    } catch (const DivergentMomentError& err) {
        return not_applicable(rep, err.what());
    }
    return rep;
}

ConstantAudit audit_constants() {
    ConstantAudit audit;
    auto coul = make_potential(PotentialId::coulomb);
    auto wf1s = build_analytic(solve_analytic(coul, 0, 0));

    audit.virial_anchor_residual = hypervirial_residual(wf1s, 0.0).residual;
    audit.kramers_anchor_residual = hypervirial_residual(wf1s, -1.0).residual;

    // (i) bracket prefactor from the (l=0, s=-1) anchor:
    // p * <dV/dr> = C^2  =>  p = C^2 / <dV/dr>, to be compared with the
    // printed m/(2 hbar^2) and the adopted 2m/hbar^2 (natural units: 0.5 / 2)
    {
        const double C = origin_coefficient(wf1s).coeff;
        const double m1 = mom_tail_prime(wf1s, 0.0);
        ConstantAuditRow row;
        row.statement = "m/(2 hbar^2) bracket form";
        row.what = "prefactor of the {<r^{s+1}V'> + 2(s+1)[...]} bracket";
        row.literal = 0.5;  // m / (2 hbar^2)
        row.required = 2.0; // 2 m / hbar^2
        row.measured = C * C / m1;
        row.note = "printed factor is 4x too small against the boundary term";
        audit.rows.push_back(row);
    }

    // (ii) the same prefactor extracted from the interior s = 2 member, where
    // it is fixed relative to the <r^{s-2}> coefficient (s = 1 has that
    // coefficient zero at l = 0, so s = 2 is the first usable anchor)
    {
        const double s = 2.0;
        const double b1 = mom_tail_prime(wf1s, s + 1.0);
        const double b2 = mom_tail(wf1s, s);
        const double b3 = moment_rs(wf1s, s).value;
        const double b4 = moment_rs(wf1s, s - 2.0).value;
        const double c2 = 0.5 * s * (1.0 - s) * (1.0 + s);
        const double measured =
            -c2 * b4 / (b1 + 2.0 * (s + 1.0) * (b2 - wf1s.state.energy * b3));
        ConstantAuditRow row;
        row.statement = "2m/hbar^2 summary form";
        row.what = "same prefactor from the interior s = 2 member";
        row.literal = 2.0;
        row.required = 2.0;
        row.measured = measured;
        row.note = "summary statement already carries the anchored factor";
        audit.rows.push_back(row);
    }

    // (iii) soft-singular boundary constant: adopted right side is
    // (2P)^2 a_st^2; the earlier statement's S(S-2P) delta evaluates to twice
    // that, and its doubled bracket is coherent only with the k-indexed form
    {
        auto val = make_potential(PotentialId::valence_electron);
        auto wfv = build_analytic(solve_analytic(val, 0, 1)); // 2P = 1
        const double a = origin_coefficient(wfv).coeff;
        const auto rep = hypervirial_residual(wfv, -1.0); // s = -2P
        ConstantAuditRow row;
        row.statement = "soft boundary S(S-2P) form";
        row.what = "boundary constant at s = -2P in units of a_st^2";
        row.literal = 8.0 * wfv.state.P * wfv.state.P;  // S(S-2P) at S = -2P
        row.required = 4.0 * wfv.state.P * wfv.state.P; // (2P)^2
        row.measured = rep.lhs / (a * a);
        row.note = "printed S(S-2P) delta gives twice the value the anchored "
                   "left side produces";
        audit.rows.push_back(row);

        ConstantAuditRow row2;
        row2.statement = "k-indexed soft form";
        row2.what = "k-indexed restatement, checked at k = 0 on the same state";
        row2.literal = 4.0;  // 4 m / hbar^2 bracket (doubled overall scale)
        row2.required = 4.0; // coherent: both sides doubled
        row2.measured = 2.0 * rep.lhs / (a * a) / (2.0 * wfv.state.P * wfv.state.P);
        row2.note = "overall doubling is coherent; the <r^{-2k-2}(E-V)> index "
                    "disagrees with the k-form by one power (uses -2k-1)";
        audit.rows.push_back(row2);
    }
    return audit;
}

} // namespace sumrules
