#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tsou/params.hpp"
#include "tsou/rng.hpp"

namespace tsou {

// Standard positive stable draw (unit Kanter scale, Laplace exponent u^alpha)
// via the Chambers–Mallows–Stuck representation; 0 < alpha < 1.
double sample_positive_stable(double alpha, RngStream& rng);

// One exact draw from the tempered stable law CTS(alpha, beta, m), i.e. the
// infinitely divisible law with Levy density m x^{-1-alpha} e^{-beta x} on
// x > 0, by tempering stable proposals: accept with probability e^{-beta s},
// overall acceptance exp(-gamma) with gamma = m Gamma(1-alpha) beta^alpha /
// alpha. Draws with gamma > 0.9 are split into k = ceil(gamma/0.9)
// independent CTS(alpha, beta, m/k) pieces and summed — exact, because the
// Levy measure is additive in m — bounding expected proposals by k e^{0.9}.
// proposal_count, when given, accumulates the number of stable candidates.
double sample_cts(double alpha, double beta, double m, RngStream& rng,
                  long long* proposal_count = nullptr);

// Intensity of the residual compound-Poisson block of a one-step increment:
// Lambda = c beta^alpha Gamma(1-alpha) (e^eps - 1 - eps) / (b alpha^2) with
// eps = alpha b dt; vanishes like dt^2 as dt -> 0.
double remainder_intensity(const CtsParams& leg, double b, double dt);

// Total jump arrival rate of a finite-activity (alpha < 0) leg:
// lambda = c Gamma(-alpha) beta^alpha.
double finite_activity_rate(const CtsParams& leg);

// Sampler for the residual-jump rate mixer V with density proportional to
// (v^alpha - 1)/v on [1, 1/a]: acceptance–rejection under a piecewise-
// constant envelope on 100 equal segments. Immutable once built.
class RemainderVSampler {
public:
    RemainderVSampler(double alpha, double a);
    double sample(RngStream& rng) const;
    double density_unnormalized(double v) const;
    double alpha() const { return alpha_; }
    double v_max() const { return v_max_; }

private:
    double alpha_;
    double v_max_;
    bool degenerate_ = false;  // a ~ 1: support collapses to {1}
    std::vector<double> edges_;
    std::vector<double> heights_;
    std::vector<double> cumulative_;  // normalized segment weights
};

// One-step increment of the integrated driver for an infinite-activity leg
// (0 < alpha < 1): the sum of a CTS(alpha, beta/a, c(1-a^alpha)/(alpha b))
// term and Poisson(Lambda)-many residual jumps, each Gamma(1-alpha, beta V)
// with V from the mixer above.
double sample_z_infinite(const CtsParams& leg, double b, double dt, RngStream& rng);
double sample_z_infinite(const CtsParams& leg, double b, double dt, RngStream& rng,
                         const RemainderVSampler& v_sampler);

// One-step increment for a finite-activity leg (alpha < 0): Poisson(lambda dt)
// jumps, each Gamma(-alpha, beta e^{b U dt}) with U ~ Uniform(0,1).
// jump_count, when given, accumulates the number of jumps drawn.
double sample_z_finite(const CtsParams& leg, double b, double dt, RngStream& rng,
                       long long* jump_count = nullptr);

namespace detail {
// Prepared tempered-stable draw: pieces iid CTS(alpha, beta, m/pieces)
// summed, each by stable rejection with per-piece scale sigma.
struct CtsPlan {
    double alpha = 0.0;
    double beta = 0.0;
    double sigma = 0.0;
    int pieces = 0;  // 0 marks an inactive leg
};
CtsPlan make_cts_plan(double alpha, double beta, double m);
double draw_cts(const CtsPlan& plan, RngStream& rng, long long* proposal_count);
}  // namespace detail

enum class Scheme {
    Exact,    // exact transition sampling, either regime
    Approx1,  // infinite activity only: drop the residual-jump block
    Approx2   // infinite activity only: Z(dt) ~ a L(dt), a = e^{-b dt}:
              // per-leg CTS(alpha, beta/a, c dt a^alpha)
};

const char* scheme_name(Scheme s);

struct PathSkeleton {
    TimeGrid grid;
    std::vector<double> values;  // X(t_i), values[0] == x0
    Scheme scheme = Scheme::Exact;
};

// Reusable plan for simulating skeletons on a fixed grid: per-step tables
// (stable scales, split counts, residual intensities, V envelopes) are built
// once, so per-path generation does no setup work. Immutable after
// construction; generate() is const and safe to call from many threads with
// distinct RngStreams.
class PathGenerator {
public:
    PathGenerator(BctsParams params, TimeGrid grid, Scheme scheme = Scheme::Exact);

    const TimeGrid& grid() const { return grid_; }
    const BctsParams& params() const { return params_; }
    Scheme scheme() const { return scheme_; }

    // X(t_0) = x0, then X(t_i) = a_i X(t_{i-1}) + Z_p - Z_n per step.
    void generate(double x0, RngStream& rng, std::vector<double>& out) const;
    PathSkeleton make_path(double x0, RngStream& rng) const;

private:
    using CtsPlan = detail::CtsPlan;
    struct InfiniteStep {  // exact scheme, one leg, one step
        CtsPlan x1;
        double lambda = 0.0;       // residual Poisson intensity
        double gamma_shape = 0.0;  // 1 - alpha
        double beta = 0.0;         // residual jump rate is beta * V
        const RemainderVSampler* mixer = nullptr;
    };
    struct FiniteStep {  // one leg, one step
        double poisson_mean = 0.0;  // lambda * dt
        double shape = 0.0;         // -alpha
        double beta = 0.0;
        double bdt = 0.0;           // b * dt
        bool active = false;
    };
    enum class Kind { InfiniteExact, InfiniteCtsOnly, Finite };

    double step_z(std::size_t step, RngStream& rng) const;
    const RemainderVSampler* mixer_for(double alpha, double a);

    BctsParams params_;
    TimeGrid grid_;
    Scheme scheme_;
    Kind kind_;
    std::vector<double> step_a_;                 // e^{-b dt_i}
    std::vector<InfiniteStep> inf_pos_, inf_neg_;
    std::vector<CtsPlan> cts_pos_, cts_neg_;     // approx schemes
    std::vector<FiniteStep> fin_pos_, fin_neg_;
    std::vector<std::unique_ptr<RemainderVSampler>> mixers_;
};

PathSkeleton simulate_skeleton(const BctsParams& params, const TimeGrid& grid, double x0,
                               Scheme scheme, RngStream& rng);

}  // namespace tsou
