#include "doctest.h"
#include "sumrules/moments.hpp"

#include <cmath>

using namespace sumrules;

namespace {
const double kSqrtPi = 1.7724538509055160273;

RadialWavefunction hydrogen(int n_r, int l) {
    auto spec = make_potential(PotentialId::coulomb);
    return build_analytic(solve_analytic(spec, n_r, l));
}
} // namespace

TEST_CASE("hydrogen moments") {
    auto wf1s = hydrogen(0, 0);
    CHECK(moment_rs(wf1s, 1.0).value == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(moment_rs(wf1s, 2.0).value == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(moment_rs(wf1s, -1.0).value == doctest::Approx(1.0).epsilon(1e-9));

    // <1/r^2> = 1 / (n^3 (l + 1/2)) in units of a0
    for (auto [nr, l] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}}) {
        auto wf = hydrogen(nr, l);
        const int n = nr + l + 1;
        CAPTURE(n);
        CAPTURE(l);
        CHECK(moment_rs(wf, -2.0).value ==
              doctest::Approx(1.0 / (n * n * n * (l + 0.5))).epsilon(1e-8));
    }
}

TEST_CASE("oscillator 1p moments match the Gaussian-integral closed forms") {
    auto spec = make_potential(PotentialId::oscillator); // omega = alpha = 1
    auto wf = build_analytic(solve_analytic(spec, 0, 1));
    const double c01sq = (8.0 / 3.0) / kSqrtPi; // alpha^{5/2} = 1
    CHECK(moment_rs(wf, 1.0).value == doctest::Approx(c01sq).epsilon(1e-9));
    CHECK(moment_rs(wf, -3.0).value == doctest::Approx(0.5 * c01sq).epsilon(1e-9));
}

TEST_CASE("divergence guard") {
    auto wf1s = hydrogen(0, 0);
    // 2l + 2 + s = -1: boundary (log) case is rejected
    CHECK_THROWS_AS(moment_rs(wf1s, -3.0), DivergentMomentError);
    CHECK_THROWS_AS(moment_rs(wf1s, -3.7), DivergentMomentError);
    auto wf2p = hydrogen(0, 1);
    CHECK_NOTHROW(moment_rs(wf2p, -3.0));
    CHECK_THROWS_AS(moment_rs(wf2p, -5.0), DivergentMomentError);
}

TEST_CASE("error estimate bounds a double-resolution recomputation") {
    // catalog analytic states, n_r <= 2, l <= 2, s in {-2..2} past the guard
    std::vector<RadialWavefunction> wfs;
    for (int nr : {0, 1, 2})
        for (int l : {0, 1, 2}) {
            wfs.push_back(hydrogen(nr, l));
            auto osc = make_potential(PotentialId::oscillator);
            wfs.push_back(build_analytic(solve_analytic(osc, nr, l)));
            if (l >= 1) {
                auto val = make_potential(PotentialId::valence_electron);
                wfs.push_back(build_analytic(solve_analytic(val, nr, l)));
            }
        }
    for (const auto& wf : wfs) {
        for (double s : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
            if (origin_power_rs(wf, s) <= -1.0 + 1e-12) continue;
            CAPTURE(to_string(wf.state.potential.id));
            CAPTURE(wf.state.n_r);
            CAPTURE(wf.state.l);
            CAPTURE(s);
            MomentRequest req;
            req.wf = &wf;
            req.integrand = [s](double r) { return std::pow(r, s); };
            req.origin_power = origin_power_rs(wf, s);
            const auto coarse = expectation(req, 1.0);
            const auto fine = expectation(req, 0.01);
            // the floor covers panel-summation roundoff, unavoidable in the
            // difference of two resolutions
            CHECK(std::abs(coarse.value - fine.value) <=
                  std::max(coarse.abs_err_estimate,
                           6e-15 * std::max(1.0, std::abs(coarse.value))));
        }
    }
}

TEST_CASE("pasternak inversion on oscillator states") {
    auto spec = make_potential(PotentialId::oscillator);
    // fixed point: -p-2 = p at p = -1, ratio is exactly 1
    {
        auto wf = build_analytic(solve_analytic(spec, 0, 1));
        const double lhs = pasternak_invert(wf, -1.0);
        CHECK(lhs == doctest::Approx(moment_rs(wf, -1.0).value).epsilon(1e-10));
    }
    for (int nr : {0, 1, 2}) {
        for (int l : {0, 1, 2}) {
            auto wf = build_analytic(solve_analytic(spec, nr, l));
            for (double p : {0.0, 1.0, 2.0}) {
                if (2 * l - p <= -1.0 + 1e-12) {
                    CHECK_THROWS_AS(pasternak_invert(wf, p), DivergentMomentError);
                    continue;
                }
                CAPTURE(nr);
                CAPTURE(l);
                CAPTURE(p);
                const double predicted = pasternak_invert(wf, p);
                const double direct = moment_rs(wf, -p - 2.0).value;
                CHECK(std::abs(predicted - direct) / std::abs(direct) < 1e-6);
            }
        }
    }
}

TEST_CASE("valence-electron <1/r^2>") {
    auto spec = make_potential(PotentialId::valence_electron); // 2P = 1 at l = 1
    for (int nr : {0, 1, 2}) {
        auto st = solve_analytic(spec, nr, 1);
        const double closed = valence_r2_moment(st);
        auto wf = build_analytic(st);
        CHECK(std::abs(moment_rs(wf, -2.0).value - closed) / closed < 1e-6);
        // 2P = 1: closed form reduces to k^2 / (2 n_r + 2), i.e. k^2/2 at n_r = 0
        const auto vp = valence_params(spec, st.energy, 1);
        CHECK(closed == doctest::Approx(vp.k * vp.k / (2.0 * nr + 2.0)).epsilon(1e-12));
    }
    // V0 -> 0 limit reproduces the hydrogen value 2 m^2 e^4 / ((2l+1) n^3 hbar^4)
    auto weak = make_potential(PotentialId::valence_electron, {{"v0", 1e-12}});
    for (auto [nr, l] : {std::pair{0, 1}, {1, 1}, {0, 2}}) {
        auto st = solve_analytic(weak, nr, l);
        const int n = nr + l + 1;
        CHECK(valence_r2_moment(st) ==
              doctest::Approx(2.0 / ((2.0 * l + 1.0) * n * n * n)).epsilon(1e-6));
    }
}
