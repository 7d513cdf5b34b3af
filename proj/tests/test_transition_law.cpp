#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "oracles.hpp"
#include "tsou/cumulants.hpp"
#include "tsou/forward_curve.hpp"
#include "tsou/transition_law.hpp"

using tsou::BctsParams;
using tsou::Complex;
using tsou::TransitionLaw;

namespace {

// desk-calibrated two-sided set used throughout the bilateral examples
const BctsParams kBcts{{0.5, 2.5, 0.5}, {0.5, 3.5, 1.0}, 0.1};
// fast-reverting symmetric-order set in CGMY parameterization
const BctsParams kCgmy = BctsParams::cgmy(2.0, 15.0, 5.0, 0.5, 10.0);
// one-sided compound-Poisson set
const BctsParams kFinite{{-0.5, 1.5, 0.3}, {-0.5, 1.5, 0.0}, 0.5};

void check_close(Complex got, Complex want, double tol, const char* what) {
    INFO(what << ": got (" << got.real() << "," << got.imag() << ") want (" << want.real() << ","
              << want.imag() << ")");
    CHECK(std::abs(got - want) <= tol * std::max(1.0, std::abs(want)));
}

}  // namespace

TEST_CASE("log-chf of the integrated driver: frozen references") {
    // references: adaptive quadrature of the time-integrated Levy symbol,
    // cross-checked against an independent scientific-python implementation
    check_close(TransitionLaw(kBcts, 1.0 / 12).psi_z(1.0),
                {-0.00987669529071846, -0.0322043518094013}, 1e-12, "bilateral u=1");
    check_close(TransitionLaw(kBcts, 1.0 / 12).psi_z(Complex(0.25, -1.75)),
                {-0.0206027891201741, 0.00480059767718333}, 1e-12, "bilateral complex u");
    check_close(TransitionLaw(kCgmy, 0.5).psi_z(1.0),
                {-0.0047008960689509591, 0.066307936363510539}, 1e-10, "cgmy u=1");
    check_close(TransitionLaw(kCgmy, 1.0 / 12).psi_z(3.0),
                {-0.032740081206897739, 0.10809733704262428}, 1e-10, "cgmy u=3");
    check_close(TransitionLaw(kFinite, 1.0 / 12).psi_z(0.7),
                {-0.0024659013235827504, 0.0073395624756199367}, 1e-10, "compound poisson");
}

TEST_CASE("CGF frozen references and drift correction") {
    const TransitionLaw law(kBcts, 1.0 / 12);
    CHECK(law.cgf_z(1.0) == doctest::Approx(-0.021317414024281695).epsilon(1e-10));
    CHECK(law.cgf_z(2.0) == doctest::Approx(-0.011376957585912647).epsilon(1e-10));
    CHECK(law.cgf_z(-2.0) == doctest::Approx(0.11036084510735647).epsilon(1e-10));

    CHECK(tsou::risk_neutral_h(1.0 / 12, kBcts) ==
          doctest::Approx(0.021317414024281695).epsilon(1e-10));
    CHECK(tsou::risk_neutral_h(1.0 / 12, kCgmy) ==
          doctest::Approx(-0.041972078592351386).epsilon(1e-9));
    CHECK(tsou::risk_neutral_h(0.25, kCgmy) ==
          doctest::Approx(-0.066473765116608657).epsilon(1e-9));
    CHECK(tsou::risk_neutral_h(1.0, kCgmy) ==
          doctest::Approx(-0.072002725733592149).epsilon(1e-9));
}

TEST_CASE("log-chf agrees with direct time-integration of the Levy symbol") {
    const double us[] = {0.1, 0.3, 0.7, 1.0, 1.7, 2.9, 5.0, 8.7, 15.0, 26.5};
    const struct {
        const BctsParams* p;
        double t;
        const char* name;
    } models[] = {
        {&kBcts, 1.0 / 12, "bilateral"},
        {&kCgmy, 0.5, "cgmy"},
        {&kFinite, 1.0 / 12, "compound-poisson"},
        {&kFinite, 2.0, "compound-poisson long"},
    };
    for (const auto& m : models) {
        const TransitionLaw law(*m.p, m.t);
        for (double u : us)
            for (double sign : {1.0, -1.0}) {
                const Complex want = oracle::psi_time_integral(sign * u, m.t, *m.p);
                check_close(law.psi_z(sign * u), want, 1e-9, m.name);
            }
    }
}

TEST_CASE("CGF agrees with time-integration across its strip") {
    for (const double s : {-3.4, -2.0, -0.7, -0.1, 0.4, 1.2, 2.1, 2.45}) {
        const double want = oracle::cgf_time_integral(s, 1.0 / 12, kBcts);
        CHECK(tsou::cgf_Z(s, 1.0 / 12, kBcts) == doctest::Approx(want).epsilon(1e-9));
    }
    // one-sided finite activity: only the upper bound binds
    for (const double s : {-30.0, -5.0, 1.0, 1.4}) {
        const double want = oracle::cgf_time_integral(s, 0.5, kFinite);
        CHECK(tsou::cgf_Z(s, 0.5, kFinite) == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("structural identities of the transition law") {
    const TransitionLaw law(kBcts, 0.4);

    CHECK(std::abs(law.psi_z(0.0)) == 0.0);

    // conjugate symmetry and a real-valued density: psi(-u) = conj(psi(u))
    for (double u : {0.3, 1.9, 12.0})
        check_close(law.psi_z(-u), std::conj(law.psi_z(u)), 1e-13, "conjugate symmetry");

    // |chf| <= 1 and the start value only rotates the phase
    for (double u : {0.5, 4.0}) {
        CHECK(std::abs(law.phi_x(u, 0.7)) <= 1.0 + 1e-15);
        CHECK(std::abs(law.phi_x(u, 0.7)) ==
              doctest::Approx(std::abs(law.phi_x(u, -2.0))).epsilon(1e-13));
    }

    // semigroup additivity over the deterministic flow
    const double t1 = 0.25, t2 = 0.15;
    const double a2 = std::exp(-kBcts.b * t2);
    for (double u : {0.6, 2.2}) {
        const Complex whole = TransitionLaw(kBcts, t1 + t2).psi_z(u);
        const Complex split =
            TransitionLaw(kBcts, t1).psi_z(u * a2) + TransitionLaw(kBcts, t2).psi_z(u);
        check_close(whole, split, 1e-12, "additivity");
    }

    // pure-imaginary arguments must match the real CGF path exactly
    for (double w : {-1.2, 0.8}) {
        const Complex v = law.psi_z(Complex(0.0, w));
        CHECK(v.imag() == 0.0);
        CHECK(v.real() == doctest::Approx(law.cgf_z(-w)).epsilon(1e-14));
    }

    // CGF is convex with value 0 and slope E[Z] at the origin
    const TransitionLaw fine(kBcts, 1.0 / 12);
    CHECK(std::abs(fine.cgf_z(0.0)) < 1e-14);
    const double eps = 1e-5;
    const double slope = (fine.cgf_z(eps) - fine.cgf_z(-eps)) / (2 * eps);
    CHECK(slope == doctest::Approx(fine.cumulants(0.0).k1).epsilon(1e-6));
    CHECK(fine.cgf_z(1.0) + fine.cgf_z(-1.0) >= 0.0);  // midpoint convexity at 0
}

TEST_CASE("zero horizon collapses to the start value") {
    const TransitionLaw law(kBcts, 0.0);
    CHECK(std::abs(law.psi_z(3.0)) == 0.0);
    check_close(law.phi_x(3.0, 1.1), std::exp(Complex(0.0, 3.0 * 1.1)), 1e-15, "t=0 chf");
}

TEST_CASE("strip violations and invalid drift corrections are rejected") {
    const TransitionLaw law(kBcts, 0.5);
    CHECK_THROWS_AS(law.psi_z(Complex(1.0, -2.5)), std::domain_error);  // at -beta_p
    CHECK_THROWS_AS(law.psi_z(Complex(1.0, 3.5)), std::domain_error);   // at beta_n
    CHECK_THROWS_AS(law.cgf_z(2.5), std::domain_error);
    CHECK_THROWS_AS(law.cgf_z(-3.5), std::domain_error);

    BctsParams soft = kBcts;
    soft.pos.beta = 0.9;  // E[exp(Z)] diverges
    CHECK_THROWS_AS(tsou::risk_neutral_h(0.5, soft), std::domain_error);

    CHECK_THROWS_AS(TransitionLaw(kBcts, -0.1), std::invalid_argument);
}

TEST_CASE("transition cumulants come from the same analytic source") {
    const TransitionLaw law(kBcts, 0.7);
    const tsou::CumulantSet direct = tsou::ou_cumulants(kBcts, 1.1, 0.7);
    const tsou::CumulantSet via = law.cumulants(1.1);
    for (int k = 1; k <= 4; ++k) CHECK(via[k] == direct[k]);
}

TEST_CASE("spot mapping applies the forward level and drift correction") {
    const tsou::ForwardCurve curve = tsou::ForwardCurve::flat(20.0);
    const double t = 0.25;
    const double h = tsou::risk_neutral_h(t, kBcts);
    CHECK(tsou::spot_price(0.0, t, curve, kBcts) == doctest::Approx(20.0 * std::exp(h)));
    CHECK(tsou::spot_price(0.3, t, curve, kBcts) ==
          doctest::Approx(20.0 * std::exp(h + 0.3)));
}
