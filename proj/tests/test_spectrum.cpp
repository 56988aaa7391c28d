#include "doctest.h"
#include "golden_io.hpp"
#include "sumrules/specfun.hpp"
#include "sumrules/spectrum.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

using namespace sumrules;

namespace {

struct SpectrumRef {
    std::string id;
    std::vector<double> params;
    int n_r;
    double aux = 0.0; // bessel order for exponential rows
    double energy;
};

std::vector<SpectrumRef> load_spectrum_golden() {
    std::ifstream in(std::string(SUMRULES_GOLDEN_DIR) + "/spectrum_golden.txt");
    REQUIRE(in.good());
    std::vector<SpectrumRef> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        SpectrumRef r;
        ss >> r.id;
        std::vector<double> nums;
        double v;
        while (ss >> v) nums.push_back(v);
        r.energy = nums.back();
        if (r.id == "exponential") {
            r.params = {nums[0], nums[1]};
            r.n_r = int(nums[2]);
            r.aux = nums[3];
        } else if (r.id == "morse") {
            r.params = {nums[0], nums[1], nums[2]};
            r.n_r = int(nums[3]);
        } else if (r.id == "woods_saxon") {
            r.params = {nums[0], nums[1], nums[2]};
            r.n_r = int(nums[3]);
        } else if (r.id == "hulthen") {
            r.params = {nums[0], nums[1]};
            r.n_r = int(nums[2]);
        }
        out.push_back(r);
    }
    return out;
}

} // namespace

TEST_CASE("coulomb closed form") {
    auto spec = make_potential(PotentialId::coulomb);
    CHECK(coulomb_energy(spec, 1) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(coulomb_energy(spec, 2) == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(std::abs(coulomb_energy(spec, 1000)) < 1e-6); // accumulation at threshold
}

TEST_CASE("airy zeros against the independent oracle") {
    const auto recs = golden::load(std::string(SUMRULES_GOLDEN_DIR) + "/specfun_golden.txt");
    int found = 0;
    double prev = 0.0;
    for (const auto& r : recs) {
        if (r.fn != "airy_neg_zero") continue;
        ++found;
        const int j = int(r.args.at(0));
        const double zj = airy_neg_zero(j);
        CHECK(std::abs(zj - r.expected) <= r.abs_tol * 10);
        CHECK(zj > prev); // increasing order
        prev = zj;
        // residual of the defining condition
        CHECK(std::abs(sumrules::specfun::airy_ai(-zj).value) < 1e-10);
    }
    CHECK(found == 6);
}

TEST_CASE("linear potential spectrum") {
    auto spec = make_potential(PotentialId::linear, {{"v0", 1.0}});
    const double e0 = linear_energy(spec, 0);
    CHECK(e0 == doctest::Approx(std::cbrt(0.5) * 2.3381074104597670).epsilon(1e-9));
    for (int nr = 0; nr < 4; ++nr)
        CHECK(linear_energy(spec, nr + 1) > linear_energy(spec, nr));
}

TEST_CASE("exponential well orders and energies vs golden") {
    for (const auto& r : load_spectrum_golden()) {
        if (r.id != "exponential") continue;
        auto spec = make_potential(PotentialId::exponential,
                                   {{"v0", r.params[0]}, {"a", r.params[1]}});
        CHECK(exponential_bessel_order(spec, r.n_r) ==
              doctest::Approx(r.aux).epsilon(1e-9));
        CHECK(exponential_energy(spec, r.n_r) ==
              doctest::Approx(r.energy).epsilon(1e-9));
        BoundState st = solve_analytic(spec, r.n_r, 0);
        CHECK(eigencondition_residual(st) < 1e-9);
    }
    // shallow well: no bound state
    auto shallow = make_potential(PotentialId::exponential, {{"v0", 0.125}, {"a", 1.0}});
    CHECK_THROWS_AS(exponential_energy(shallow, 0), NoBoundStateError);
}

TEST_CASE("hypergeometric eigenvalues vs golden") {
    for (const auto& r : load_spectrum_golden()) {
        if (r.id == "exponential") continue;
        std::map<std::string, double> over;
        PotentialId id{};
        if (r.id == "hulthen") {
            id = PotentialId::hulthen;
            over = {{"v0", r.params[0]}, {"a", r.params[1]}};
        } else if (r.id == "morse") {
            id = PotentialId::morse;
            over = {{"d", r.params[0]}, {"alpha", r.params[1]}, {"r0", r.params[2]}};
        } else if (r.id == "woods_saxon") {
            id = PotentialId::woods_saxon;
            over = {{"v0", r.params[0]}, {"R", r.params[1]}, {"a", r.params[2]}};
        }
        auto spec = make_potential(id, over);
        CAPTURE(r.id);
        CAPTURE(r.n_r);
        const double e = hypergeometric_energy(spec, r.n_r);
        CHECK(e == doctest::Approx(r.energy).epsilon(5e-9));
        BoundState st = solve_analytic(spec, r.n_r, 0);
        CHECK(eigencondition_residual(st) < 1e-8);
    }
}

TEST_CASE("hulthen root-find agrees with the literature closed form") {
    auto spec = make_potential(PotentialId::hulthen, {{"v0", 2.0}, {"a", 1.0}});
    CHECK(hypergeometric_energy(spec, 0) ==
          doctest::Approx(hulthen_energy_closed(spec, 0)).epsilon(1e-6));
    CHECK(hulthen_energy_closed(spec, 0) == doctest::Approx(-1.125).epsilon(1e-14));
    CHECK_THROWS_AS(hulthen_energy_closed(spec, 1), NoBoundStateError);
}

TEST_CASE("valence electron and singular oscillator closed forms") {
    // 2P = 1 at l = 1 with V0 = 1: levels -1/(2 (n_r+1)^2)
    auto val = make_potential(PotentialId::valence_electron);
    CHECK(valence_electron_energy(val, 0, 1) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(valence_electron_energy(val, 1, 1) == doctest::Approx(-0.125).epsilon(1e-14));
    // V0 -> 0 reproduces Balmer with n = n_r + l + 1
    auto weak = make_potential(PotentialId::valence_electron, {{"v0", 1e-13}});
    auto coul = make_potential(PotentialId::coulomb);
    for (int l : {0, 1}) {
        for (int nr : {0, 1, 2}) {
            CHECK(valence_electron_energy(weak, nr, l) ==
                  doctest::Approx(coulomb_energy(coul, nr + l + 1)).epsilon(1e-6));
        }
    }
    // singular oscillator: V0 = 0 spacing is 2 sqrt(2g/m) between n and n+1
    auto sing = make_potential(PotentialId::singular_oscillator, {{"g", 0.5}});
    const double d10 = singular_oscillator_energy(sing, 1, 1) -
                       singular_oscillator_energy(sing, 0, 1);
    CHECK(d10 == doctest::Approx(2.0 * std::sqrt(2.0 * 0.5)).epsilon(1e-14));
    // direct substitution at 2P = 1: E = sqrt(2g)(2n + 3/2)
    CHECK(singular_oscillator_energy(sing, 0, 1) ==
          doctest::Approx(std::sqrt(1.0) * 1.5).epsilon(1e-14));
}

TEST_CASE("numerov reproduces hydrogen and oscillator") {
    auto coul = make_potential(PotentialId::coulomb);
    auto r0 = numerov_solve(coul, 0, 0);
    CHECK(r0.state.energy == doctest::Approx(-0.5).epsilon(2e-6));
    CHECK(r0.nodes == 0);

    auto r1 = numerov_solve(coul, 0, 1);
    CHECK(r1.state.energy == doctest::Approx(-0.125).epsilon(2e-6));
    CHECK(r1.nodes == 1);

    auto osc = make_potential(PotentialId::oscillator); // omega = 1
    auto s0 = numerov_solve(osc, 0, 0);
    CHECK(s0.state.energy == doctest::Approx(1.5).epsilon(1e-6));
    auto s2 = numerov_solve(osc, 1, 2);
    CHECK(s2.state.energy == doctest::Approx(oscillator_energy(osc, 2, 1)).epsilon(1e-6));
    CHECK(s2.nodes == 2);
}

TEST_CASE("numerov matches the linear-potential airy energies") {
    auto lin = make_potential(PotentialId::linear);
    for (int nr : {0, 1}) {
        auto res = numerov_solve(lin, 0, nr);
        CHECK(std::abs(res.state.energy - linear_energy(lin, nr)) < 1e-6);
    }
}

TEST_CASE("numerov handles a soft-singular potential") {
    auto sing = make_potential(PotentialId::singular_oscillator);
    auto res = numerov_solve(sing, 1, 1);
    CHECK(std::abs(res.state.energy - singular_oscillator_energy(sing, 1, 1)) < 1e-6);
    CHECK(res.nodes == 1);
}

TEST_CASE("energies increase with n_r at fixed l") {
    auto spec = make_potential(PotentialId::quarkonium);
    double prev = -1e300;
    for (int nr = 0; nr <= 2; ++nr) {
        auto res = numerov_solve(spec, 1, nr);
        CHECK(res.state.energy > prev);
        prev = res.state.energy;
    }
}

TEST_CASE("hard-singular request is rejected") {
    auto val = make_potential(PotentialId::valence_electron); // V0 = 1
    CHECK_THROWS_AS(numerov_solve(val, 0, 0), HardSingularError);
    CHECK_THROWS_AS(solve_analytic(val, 0, 0), HardSingularError);
}
