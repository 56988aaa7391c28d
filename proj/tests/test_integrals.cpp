#include "doctest.h"
#include "sumrules/integrals.hpp"

#include <cmath>

using namespace sumrules;

namespace {
const std::vector<IntegralId> kAll = {
    IntegralId::bessel_main,     IntegralId::bessel_weighted,
    IntegralId::hulthen,         IntegralId::morse_potential,
    IntegralId::morse_virial,    IntegralId::woods_saxon};
}

TEST_CASE("each identity holds on shell for the two lowest states") {
    for (IntegralId id : kAll) {
        for (int nr : {0, 1}) {
            CAPTURE(to_string(id));
            CAPTURE(nr);
            const auto out = verify_identity(id, nr);
            CHECK(out.report.residual < 1e-6);
            CHECK(out.report.pass);
        }
    }
}

TEST_CASE("off-shell perturbation breaks each identity") {
    for (IntegralId id : kAll) {
        CAPTURE(to_string(id));
        const auto out = offshell_control(id, 0, 0.01);
        CHECK(out.report.residual > 1e-3);
        CHECK(out.report.pass); // the control passes by breaking
    }
}

TEST_CASE("bessel weighted identity needs the normalization integral") {
    const auto out = verify_identity(IntegralId::bessel_weighted, 0);
    // the printed form without it misses badly
    CHECK(out.printed_form_residual > 1e-3);
    CHECK(out.report.residual < 1e-6);
}

TEST_CASE("hulthen printed sign is reversed") {
    const auto out = verify_identity(IntegralId::hulthen, 0);
    CHECK(out.report.residual < 1e-6);
    CHECK(out.printed_form_residual > 1.0); // sign flip: ~2 relative
}

TEST_CASE("morse identity holds off the alpha = 1 special point") {
    // exercises the alpha-dependence of the prefactor that the printed form
    // misstates
    std::map<std::string, double> over = {{"alpha", 1.3}, {"r0", 1.4}, {"d", 5.0}};
    for (IntegralId id : {IntegralId::morse_potential, IntegralId::morse_virial}) {
        CAPTURE(to_string(id));
        const auto out = verify_identity(id, 0, over);
        CHECK(out.report.residual < 1e-6);
    }
}

TEST_CASE("woods-saxon empirical prefactor is a, not a^3") {
    const auto out = verify_identity(IntegralId::woods_saxon, 0);
    CHECK(out.report.residual < 1e-6);
    CHECK(out.printed_form_residual > 1e-2);
    CHECK(out.printed_form_note.find("a^3") != std::string::npos);
}

TEST_CASE("default parameters admit the states the checks need") {
    for (IntegralId id : kAll) {
        auto spec = integral_default_potential(id);
        CHECK_NOTHROW(solve_analytic(spec, 1, 0));
    }
}
