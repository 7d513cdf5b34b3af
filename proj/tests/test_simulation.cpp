#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "tsou/cumulants.hpp"
#include "tsou/simulation.hpp"
#include "tsou/transition_law.hpp"

using oracle::Complex;
using tsou::BctsParams;
using tsou::CtsParams;
using tsou::PathGenerator;
using tsou::RngStream;
using tsou::Scheme;
using tsou::TimeGrid;

namespace {

const BctsParams kBcts{{0.5, 2.5, 0.5}, {0.5, 3.5, 1.0}, 0.1};
const CtsParams kFiniteLeg{-0.5, 1.5, 0.3};

// empirical chf with a componentwise standard error
struct ChfEstimate {
    Complex value;
    double se;
};

ChfEstimate empirical_chf(const std::vector<double>& xs, double u) {
    double cr = 0.0, ci = 0.0, cr2 = 0.0, ci2 = 0.0;
    for (double x : xs) {
        const double re = std::cos(u * x), im = std::sin(u * x);
        cr += re;
        ci += im;
        cr2 += re * re;
        ci2 += im * im;
    }
    const double n = static_cast<double>(xs.size());
    const double mr = cr / n, mi = ci / n;
    const double vr = std::max(0.0, cr2 / n - mr * mr), vi = std::max(0.0, ci2 / n - mi * mi);
    return {Complex(mr, mi), std::sqrt((vr + vi) / n)};
}

void check_chf_within(const std::vector<double>& xs, double u, Complex want, double n_se,
                      const char* what) {
    const ChfEstimate est = empirical_chf(xs, u);
    INFO(what << " u=" << u << ": |diff|=" << std::abs(est.value - want)
              << " allowed=" << n_se * est.se);
    CHECK(std::abs(est.value - want) <= n_se * std::max(est.se, 1e-12));
}

}  // namespace

TEST_CASE("positive stable draws at alpha = 1/2 follow the closed-form law") {
    RngStream rng(2024);
    std::vector<double> xs(200000);
    for (double& x : xs) x = tsou::sample_positive_stable(0.5, rng);
    // Laplace transform exp(-sqrt(s)) <=> CDF erfc(1/(2 sqrt(x)))
    const double d = oracle::ks_statistic(xs, oracle::half_stable_cdf);
    CHECK(d < 0.004);  // 1.36/sqrt(n) ~ 0.003 at the 5% level
}

TEST_CASE("tempered stable draws reproduce the analytic mean and variance") {
    const double alpha = 0.5, beta = 2.0, m = 0.4;
    const double k1 = m * std::tgamma(1.0 - alpha) * std::pow(beta, alpha - 1.0);
    const double k2 = m * std::tgamma(2.0 - alpha) * std::pow(beta, alpha - 2.0);

    RngStream rng(7);
    const long long n = 400000;
    double s1 = 0.0, s2 = 0.0;
    for (long long i = 0; i < n; ++i) {
        const double x = tsou::sample_cts(alpha, beta, m, rng);
        REQUIRE(x >= 0.0);
        s1 += x;
        s2 += x * x;
    }
    const double mean = s1 / n, var = s2 / n - mean * mean;
    const double se_mean = std::sqrt(var / n);
    CHECK(std::abs(mean - k1) < 4.0 * se_mean);
    CHECK(std::abs(var - k2) < 0.02 * k2);
}

TEST_CASE("split tempered stable draws keep the exact law (large tempering mass)") {
    // gamma = m Gamma(1-alpha) beta^alpha / alpha ~ 35: the sampler must split
    const double alpha = 0.5, beta = 1.0, m = 10.0;
    const double gamma = m * std::tgamma(0.5) * std::pow(beta, alpha) / alpha;
    REQUIRE(gamma > 30.0);

    RngStream rng(11);
    const long long n = 150000;
    std::vector<double> xs(n);
    long long proposals = 0;
    for (double& x : xs) x = tsou::sample_cts(alpha, beta, m, rng, &proposals);
    // expected proposals stay linear in the split count, not exp(gamma):
    // ceil(gamma/0.9) pieces at e^{0.9} candidates each
    const double per_draw = std::ceil(gamma / 0.9) * std::exp(0.9);
    CHECK(static_cast<double>(proposals) < 1.5 * per_draw * static_cast<double>(n));

    const CtsParams leg{alpha, beta, m};
    for (double u : {0.4, 1.1, 2.6}) {
        const Complex want = std::exp(oracle::leg_symbol(u, leg));
        check_chf_within(xs, u, want, 4.0, "split cts");
    }
}

TEST_CASE("residual-intensity formula: quadratic small-step law and positivity") {
    const CtsParams leg{0.5, 2.5, 0.5};
    const double b = 0.1;
    // Lambda ~ c beta^alpha Gamma(1-alpha) b dt^2 / 2 as dt -> 0
    const double dt = 1e-6;
    const double taylor =
        leg.c * std::pow(leg.beta, leg.alpha) * std::tgamma(0.5) * b * dt * dt / 2.0;
    CHECK(tsou::remainder_intensity(leg, b, dt) == doctest::Approx(taylor).epsilon(1e-5));
    // grows with the step and stays finite
    CHECK(tsou::remainder_intensity(leg, b, 1.0) > tsou::remainder_intensity(leg, b, 0.5));
}

TEST_CASE("finite-activity arrival rate equals the integrated jump density") {
    // integral of c x^{-1-alpha} e^{-beta x} over x > 0 on x = y^2
    const double want = oracle::simpson(
        [&](double y) {
            return 2.0 * kFiniteLeg.c * std::pow(y, -2.0 * kFiniteLeg.alpha - 1.0) *
                   std::exp(-kFiniteLeg.beta * y * y);
        },
        0.0, 12.0, 1e-13);
    CHECK(tsou::finite_activity_rate(kFiniteLeg) == doctest::Approx(want).epsilon(1e-9));
    CHECK(tsou::finite_activity_rate(kFiniteLeg) ==
          doctest::Approx(0.43416075273467264).epsilon(1e-9));

    CHECK_THROWS_AS(tsou::finite_activity_rate(CtsParams{0.5, 1.5, 0.3}),
                    std::invalid_argument);
}

TEST_CASE("residual-rate mixer matches its density") {
    const double alpha = 0.5, a = std::exp(-0.8);
    const tsou::RemainderVSampler mixer(alpha, a);
    const double vmax = 1.0 / a;
    REQUIRE(mixer.v_max() == doctest::Approx(vmax));

    // analytic CDF of (v^alpha - 1)/v on [1, vmax]
    const auto mass = [&](double v) { return (std::pow(v, alpha) - 1.0) / alpha - std::log(v); };
    const double total = mass(vmax);
    RngStream rng(5);
    std::vector<double> xs(120000);
    for (double& x : xs) {
        x = mixer.sample(rng);
        REQUIRE(x >= 1.0);
        REQUIRE(x <= vmax);
    }
    const double d = oracle::ks_statistic(xs, [&](double v) {
        return v <= 1.0 ? 0.0 : (v >= vmax ? 1.0 : mass(v) / total);
    });
    CHECK(d < 0.005);

    // a -> 1 collapses the support to {1}
    const tsou::RemainderVSampler tight(alpha, 1.0 - 1e-14);
    RngStream r2(1);
    CHECK(tight.sample(r2) == 1.0);
}

TEST_CASE("one-step infinite-activity increments follow the transition law") {
    const CtsParams leg = kBcts.pos;
    const double b = kBcts.b, dt = 1.0 / 12.0;
    RngStream rng(31);
    std::vector<double> xs(200000);
    for (double& x : xs) x = tsou::sample_z_infinite(leg, b, dt, rng);

    const BctsParams one_sided{leg, {0.5, 1.0, 0.0}, b};
    const tsou::TransitionLaw law(one_sided, dt);
    for (double u : {0.5, 1.5, 4.0, 9.0})
        check_chf_within(xs, u, std::exp(law.psi_z(u)), 4.0, "z infinite");
}

TEST_CASE("one-step compound-Poisson increments follow the transition law") {
    const double b = 0.5, dt = 1.0 / 12.0;
    RngStream rng(37);
    std::vector<double> xs(200000);
    long long jumps = 0;
    for (double& x : xs) x = tsou::sample_z_finite(kFiniteLeg, b, dt, rng, &jumps);

    // arrival count has mean lambda dt
    const double want_jumps = tsou::finite_activity_rate(kFiniteLeg) * dt;
    const double mean_jumps = static_cast<double>(jumps) / static_cast<double>(xs.size());
    CHECK(std::abs(mean_jumps - want_jumps) <
          4.0 * std::sqrt(want_jumps / static_cast<double>(xs.size())));

    const BctsParams one_sided{kFiniteLeg, {-0.5, 1.0, 0.0}, b};
    const tsou::TransitionLaw law(one_sided, dt);
    for (double u : {0.5, 1.5, 4.0})
        check_chf_within(xs, u, std::exp(law.psi_z(u)), 4.0, "z finite");
}

TEST_CASE("multi-step exact paths compose to the whole-horizon law") {
    const TimeGrid grid({0.0, 0.1, 0.35, 0.6});
    const PathGenerator gen(kBcts, grid, Scheme::Exact);
    const double x0 = 0.8;

    RngStream rng(41);
    std::vector<double> path;
    std::vector<double> finals(120000);
    for (double& f : finals) {
        gen.generate(x0, rng, path);
        REQUIRE(path.size() == grid.size());
        REQUIRE(path[0] == x0);
        f = path.back();
    }
    const tsou::TransitionLaw law(kBcts, grid.back());
    for (double u : {0.5, 1.2, 3.0})
        check_chf_within(finals, u, law.phi_x(u, x0), 4.0, "path endpoint");
}

TEST_CASE("approximate schemes: reduced one-step laws, infinite activity only") {
    const TimeGrid grid = TimeGrid::uniform(0.0, 0.25, 2);
    CHECK_NOTHROW(PathGenerator(kBcts, grid, Scheme::Approx1));
    CHECK_NOTHROW(PathGenerator(kBcts, grid, Scheme::Approx2));

    const BctsParams finite{kFiniteLeg, {-0.5, 1.5, 0.0}, 0.5};
    CHECK_NOTHROW(PathGenerator(finite, grid, Scheme::Exact));
    CHECK_THROWS_AS(PathGenerator(finite, grid, Scheme::Approx1), std::invalid_argument);
    CHECK_THROWS_AS(PathGenerator(finite, grid, Scheme::Approx2), std::invalid_argument);

    // the first approximation drops a nonnegative remainder from the positive
    // leg, so with only that leg active its mean must sit strictly below exact
    const BctsParams pos_only{{0.5, 2.5, 0.5}, {0.5, 1.0, 0.0}, 0.1};
    const TimeGrid one = TimeGrid::uniform(0.0, 1.0, 1);
    const PathGenerator exact(pos_only, one, Scheme::Exact);
    const PathGenerator approx(pos_only, one, Scheme::Approx1);
    RngStream r1(3), r2(3);
    double se = 0.0, sa = 0.0;
    std::vector<double> p;
    const long long n = 60000;
    for (long long i = 0; i < n; ++i) {
        exact.generate(0.0, r1, p);
        se += p[1];
        approx.generate(0.0, r2, p);
        sa += p[1];
    }
    CHECK(sa / static_cast<double>(n) < se / static_cast<double>(n));
}

TEST_CASE("second approximation draws the scaled-driver law") {
    // one long step: the scheme replaces Z(dt) by a L(dt) with a = e^{-b dt},
    // whose j-th cumulant is a^j times the driver cumulant over dt
    const double dt = 31.0 / 360.0;
    const BctsParams p = BctsParams::cgmy(2.0, 15.0, 5.0, 0.7, 10.0);
    const double a = std::exp(-p.b * dt);
    const PathGenerator gen(p, TimeGrid::uniform(0.0, dt, 1), Scheme::Approx2);
    RngStream rng(97);
    std::vector<double> path;
    const long long n = 150000;
    std::vector<double> draws(n);
    double s1 = 0.0;
    for (double& d : draws) {
        gen.generate(0.0, rng, path);
        d = path[1];
        s1 += d;
    }
    const double mean = s1 / static_cast<double>(n);
    double s2 = 0.0, m4 = 0.0;
    for (double d : draws) {
        const double c = d - mean;
        s2 += c * c;
        m4 += c * c * c * c;
    }
    const double var = s2 / static_cast<double>(n - 1);
    m4 /= static_cast<double>(n);
    const double want_mean = a * tsou::levy_cumulant(p, 1) * dt;
    const double want_var = a * a * tsou::levy_cumulant(p, 2) * dt;
    CHECK(std::abs(mean - want_mean) <= 4.0 * std::sqrt(var / static_cast<double>(n)));
    CHECK(std::abs(var - want_var) <=
          4.0 * std::sqrt((m4 - var * var) / static_cast<double>(n)));
}

TEST_CASE("scheme names are stable identifiers") {
    CHECK(std::string(tsou::scheme_name(Scheme::Exact)) == "exact");
    CHECK(std::string(tsou::scheme_name(Scheme::Approx1)) == "approx1");
    CHECK(std::string(tsou::scheme_name(Scheme::Approx2)) == "approx2");
}

TEST_CASE("path generation is reproducible and stream-separated") {
    const TimeGrid grid = TimeGrid::uniform(0.0, 0.1, 5);
    const PathGenerator gen(kBcts, grid, Scheme::Exact);
    RngStream a(99, 1), b(99, 1), c(99, 2);
    std::vector<double> pa, pb, pc;
    gen.generate(0.0, a, pa);
    gen.generate(0.0, b, pb);
    gen.generate(0.0, c, pc);
    CHECK(pa == pb);
    CHECK(pa != pc);

    RngStream d(99, 1);
    const tsou::PathSkeleton sk = tsou::simulate_skeleton(kBcts, grid, 0.0, Scheme::Exact, d);
    CHECK(sk.values == pa);
    CHECK(sk.scheme == Scheme::Exact);
}
