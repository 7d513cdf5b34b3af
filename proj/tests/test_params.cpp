#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "tsou/cumulants.hpp"
#include "tsou/params.hpp"

using tsou::BctsParams;
using tsou::CtsParams;
using tsou::Regime;
using tsou::TimeGrid;

TEST_CASE("leg validation enforces the supported parameter ranges") {
    CtsParams leg{0.5, 2.0, 1.0};
    CHECK_NOTHROW(leg.validate());

    CHECK_THROWS_AS((CtsParams{1.0, 2.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CtsParams{1.5, 2.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CtsParams{0.0, 2.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CtsParams{0.5, 0.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CtsParams{0.5, -1.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CtsParams{0.5, 2.0, -0.1}.validate()), std::invalid_argument);
    CHECK_NOTHROW((CtsParams{-0.5, 2.0, 1.0}.validate()));  // compound Poisson
    CHECK_NOTHROW((CtsParams{0.5, 2.0, 0.0}.validate()));   // absent leg
}

TEST_CASE("regimes split at alpha = 0") {
    CHECK(CtsParams{0.4, 1.0, 1.0}.regime() == Regime::InfiniteActivity);
    CHECK(CtsParams{-0.4, 1.0, 1.0}.regime() == Regime::FiniteActivity);
}

TEST_CASE("bilateral validation") {
    BctsParams p{{0.5, 2.5, 0.5}, {0.5, 3.5, 1.0}, 0.1};
    CHECK_NOTHROW(p.validate());

    BctsParams bad = p;
    bad.b = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = p;
    bad.pos.c = bad.neg.c = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = p;
    bad.neg.alpha = -0.5;  // mixed regimes
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = p;
    bad.neg.c = 0.0;
    bad.neg.alpha = -0.5;  // inactive leg's regime does not matter
    CHECK_NOTHROW(bad.validate());
    CHECK(bad.one_sided());
    CHECK(bad.regime() == Regime::InfiniteActivity);
}

TEST_CASE("CGMY parameters map onto the bilateral form") {
    const BctsParams p = BctsParams::cgmy(2.0, 15.0, 5.0, 0.5, 10.0);
    CHECK(p.pos.alpha == 0.5);
    CHECK(p.pos.beta == 5.0);   // positive jumps tempered at M
    CHECK(p.neg.beta == 15.0);  // negative jumps tempered at G
    CHECK(p.pos.c == 2.0);
    CHECK(p.neg.c == 2.0);
    CHECK(p.b == 10.0);
    CHECK(p.is_cgmy());
    CHECK_FALSE(p.one_sided());
}

TEST_CASE("time grids reject non-increasing or negative times") {
    CHECK_THROWS_AS(TimeGrid(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid({-0.1, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid({0.0, 0.5, 0.5}), std::invalid_argument);

    const TimeGrid g = TimeGrid::uniform(0.0, 0.25, 4);
    CHECK(g.size() == 5);
    CHECK(g.back() == doctest::Approx(1.0));
    CHECK(g.dt(2) == doctest::Approx(0.25));

    const TimeGrid d = TimeGrid::daily_from_origin(3, 30, 360);
    REQUIRE(d.size() == 4);
    CHECK(d[0] == 0.0);
    CHECK(d[1] == doctest::Approx(31.0 / 360.0));
    CHECK(d[3] == doctest::Approx(33.0 / 360.0));
    CHECK(d.dt(0) == doctest::Approx(31.0 / 360.0));  // origin to first settle
    CHECK(d.dt(1) == doctest::Approx(1.0 / 360.0));
}

TEST_CASE("unit-time driver cumulants match the Levy-measure moment integrals") {
    const BctsParams two{{0.5, 2.5, 0.5}, {0.5, 3.5, 1.0}, 0.1};
    for (int k = 1; k <= 4; ++k) {
        // moment of x^k against one leg's density, on x = y^2 to kill the
        // boundary singularity of the infinite-activity density
        const auto moment = [&](const tsou::CtsParams& leg) {
            return oracle::simpson(
                [&](double y) {
                    return 2.0 * leg.c * std::pow(y, 2.0 * (k - leg.alpha) - 1.0) *
                           std::exp(-leg.beta * y * y);
                },
                0.0, std::sqrt(80.0 / leg.beta), 1e-13);
        };
        const double want = moment(two.pos) + (k % 2 == 0 ? 1.0 : -1.0) * moment(two.neg);
        CHECK(tsou::levy_cumulant(two, k) == doctest::Approx(want).epsilon(1e-7));
    }
}

TEST_CASE("transition cumulants: short-time growth and stationary limit") {
    const BctsParams p{{0.5, 2.5, 0.5}, {0.5, 3.5, 1.0}, 0.4};
    const double x0 = 1.3;

    // t -> 0: k1 -> x0, higher cumulants vanish linearly
    const tsou::CumulantSet small = tsou::ou_cumulants(p, x0, 1e-9);
    CHECK(small.k1 == doctest::Approx(x0).epsilon(1e-8));
    CHECK(small.k2 == doctest::Approx(1e-9 * tsou::levy_cumulant(p, 2)).epsilon(1e-6));

    // t -> inf: x0 forgotten, k_k -> unit-time cumulant / (k b)
    const tsou::CumulantSet inf = tsou::ou_cumulants(p, x0, 500.0);
    for (int k = 1; k <= 4; ++k)
        CHECK(inf[k] == doctest::Approx(tsou::levy_cumulant(p, k) / (k * p.b)).epsilon(1e-12));

    // additivity over the flow: cum(t1 + t2) = decay of cum(t1) + cum(t2)
    const double t1 = 0.3, t2 = 0.7;
    const tsou::CumulantSet a = tsou::ou_cumulants(p, x0, t1);
    const tsou::CumulantSet c = tsou::ou_cumulants(p, x0, t1 + t2);
    const double decay = std::exp(-p.b * t2);
    for (int k = 1; k <= 4; ++k) {
        const tsou::CumulantSet b2 = tsou::ou_cumulants(p, 0.0, t2);
        CHECK(c[k] ==
              doctest::Approx(a[k] * std::pow(decay, k) + b2[k]).epsilon(1e-12));
    }
}

TEST_CASE("relative error helper") {
    CHECK(tsou::err_pct(2.0, 1.9) == doctest::Approx(0.05));
    CHECK_THROWS_AS(tsou::err_pct(0.0, 1.0), std::domain_error);
}
