#include "tsou/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tsou {

namespace {

void check_infinite(double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument(std::string(who) + " needs alpha in (0,1)");
}

// Stable-rejection acceptance exponent of one CTS(alpha, beta, m) draw.
double tempering_exponent(double alpha, double beta, double m) {
    return m * std::tgamma(1.0 - alpha) * std::pow(beta, alpha) / alpha;
}

}  // namespace

double sample_positive_stable(double alpha, RngStream& rng) {
    check_infinite(alpha, "sample_positive_stable");
    const double theta = rng.uniform(0.0, std::numbers::pi);
    const double e = rng.exponential(1.0);
    const double a_theta = std::sin((1.0 - alpha) * theta) *
                           std::pow(std::sin(alpha * theta), alpha / (1.0 - alpha)) /
                           std::pow(std::sin(theta), 1.0 / (1.0 - alpha));
    return std::pow(a_theta / e, (1.0 - alpha) / alpha);
}

namespace detail {

CtsPlan make_cts_plan(double alpha, double beta, double m) {
    check_infinite(alpha, "sample_cts");
    if (!(beta > 0.0) || !(m > 0.0))
        throw std::invalid_argument("sample_cts needs beta > 0 and m > 0");
    const double gamma = tempering_exponent(alpha, beta, m);
    const int pieces = gamma > 0.9 ? static_cast<int>(std::ceil(gamma / 0.9)) : 1;
    const double m_piece = m / pieces;
    CtsPlan plan;
    plan.alpha = alpha;
    plan.beta = beta;
    plan.sigma = std::pow(m_piece * std::tgamma(1.0 - alpha) / alpha, 1.0 / alpha);
    plan.pieces = pieces;
    return plan;
}

double draw_cts(const CtsPlan& plan, RngStream& rng, long long* proposal_count) {
    double total = 0.0;
    for (int piece = 0; piece < plan.pieces; ++piece) {
        for (;;) {
            const double s = plan.sigma * sample_positive_stable(plan.alpha, rng);
            if (proposal_count) ++*proposal_count;
            if (rng.exponential(1.0) >= plan.beta * s) {  // accept w.p. e^{-beta s}
                total += s;
                break;
            }
        }
    }
    return total;
}

}  // namespace detail

double sample_cts(double alpha, double beta, double m, RngStream& rng,
                  long long* proposal_count) {
    return detail::draw_cts(detail::make_cts_plan(alpha, beta, m), rng, proposal_count);
}

double remainder_intensity(const CtsParams& leg, double b, double dt) {
    check_infinite(leg.alpha, "remainder_intensity");
    if (!(b > 0.0) || !(dt >= 0.0))
        throw std::invalid_argument("remainder_intensity needs b > 0, dt >= 0");
    const double eps = leg.alpha * b * dt;
    // e^eps - 1 - eps, series-guarded so tiny steps keep full relative accuracy
    const double growth = eps < 1e-4 ? 0.5 * eps * eps * (1.0 + eps / 3.0 + eps * eps / 12.0)
                                     : std::expm1(eps) - eps;
    return leg.c * std::pow(leg.beta, leg.alpha) * std::tgamma(1.0 - leg.alpha) * growth /
           (b * leg.alpha * leg.alpha);
}

double finite_activity_rate(const CtsParams& leg) {
    if (!(leg.alpha < 0.0))
        throw std::invalid_argument("finite_activity_rate needs alpha < 0");
    return leg.c * std::tgamma(-leg.alpha) * std::pow(leg.beta, leg.alpha);
}

RemainderVSampler::RemainderVSampler(double alpha, double a) : alpha_(alpha) {
    check_infinite(alpha, "RemainderVSampler");
    if (!(a > 0.0 && a <= 1.0))
        throw std::invalid_argument("RemainderVSampler needs a in (0,1]");
    v_max_ = 1.0 / a;
    if (v_max_ - 1.0 < 1e-12) {
        degenerate_ = true;
        return;
    }
    constexpr int kSegments = 100;
    const double mode = std::pow(1.0 - alpha, -1.0 / alpha);
    const double width = (v_max_ - 1.0) / kSegments;
    edges_.resize(kSegments + 1);
    heights_.resize(kSegments);
    cumulative_.resize(kSegments);
    double running = 0.0;
    for (int i = 0; i <= kSegments; ++i) edges_[i] = 1.0 + width * i;
    edges_.back() = v_max_;
    for (int i = 0; i < kSegments; ++i) {
        // sup of the unimodal density on the segment
        double peak;
        if (edges_[i + 1] <= mode) peak = density_unnormalized(edges_[i + 1]);
        else if (edges_[i] >= mode) peak = density_unnormalized(edges_[i]);
        else peak = density_unnormalized(mode);
        heights_[i] = peak;
        running += peak * (edges_[i + 1] - edges_[i]);
        cumulative_[i] = running;
    }
    for (auto& c : cumulative_) c /= running;
    cumulative_.back() = 1.0;
}

double RemainderVSampler::density_unnormalized(double v) const {
    return (std::pow(v, alpha_) - 1.0) / v;
}

double RemainderVSampler::sample(RngStream& rng) const {
    if (degenerate_) return 1.0;
    for (;;) {
        const double u = rng.uniform01();
        const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
        const auto seg = static_cast<std::size_t>(it - cumulative_.begin());
        const double v = rng.uniform(edges_[seg], edges_[seg + 1]);
        if (rng.uniform01() * heights_[seg] <= density_unnormalized(v)) return v;
    }
}

namespace {

double draw_remainder_block(double lambda, double gamma_shape, double beta,
                            const RemainderVSampler& mixer, RngStream& rng) {
    const long long n = rng.poisson(lambda);
    double sum = 0.0;
    for (long long k = 0; k < n; ++k) {
        const double v = mixer.sample(rng);
        sum += rng.gamma(gamma_shape, beta * v);
    }
    return sum;
}

}  // namespace

double sample_z_infinite(const CtsParams& leg, double b, double dt, RngStream& rng,
                         const RemainderVSampler& v_sampler) {
    check_infinite(leg.alpha, "sample_z_infinite");
    const double a = std::exp(-b * dt);
    const double m1 = leg.c * (-std::expm1(-leg.alpha * b * dt)) / (leg.alpha * b);
    const double x1 = sample_cts(leg.alpha, leg.beta / a, m1, rng);
    const double lambda = remainder_intensity(leg, b, dt);
    return x1 + draw_remainder_block(lambda, 1.0 - leg.alpha, leg.beta, v_sampler, rng);
}

double sample_z_infinite(const CtsParams& leg, double b, double dt, RngStream& rng) {
    const RemainderVSampler v_sampler(leg.alpha, std::exp(-b * dt));
    return sample_z_infinite(leg, b, dt, rng, v_sampler);
}

double sample_z_finite(const CtsParams& leg, double b, double dt, RngStream& rng,
                       long long* jump_count) {
    if (!(leg.alpha < 0.0))
        throw std::invalid_argument("sample_z_finite needs alpha < 0");
    const long long n = rng.poisson(finite_activity_rate(leg) * dt);
    if (jump_count) *jump_count += n;
    double sum = 0.0;
    for (long long k = 0; k < n; ++k) {
        const double u = rng.uniform01();
        sum += rng.gamma(-leg.alpha, leg.beta * std::exp(b * u * dt));
    }
    return sum;
}

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Exact: return "exact";
        case Scheme::Approx1: return "approx1";
        default: return "approx2";
    }
}

PathGenerator::PathGenerator(BctsParams params, TimeGrid grid, Scheme scheme)
    : params_(std::move(params)), grid_(std::move(grid)), scheme_(scheme) {
    params_.validate();
    const bool infinite = params_.regime() == Regime::InfiniteActivity;
    if (!infinite && scheme_ != Scheme::Exact)
        throw std::invalid_argument(
            "approximate schemes are defined only for the infinite-activity regime");
    kind_ = !infinite ? Kind::Finite
                      : (scheme_ == Scheme::Exact ? Kind::InfiniteExact : Kind::InfiniteCtsOnly);

    const std::size_t n_steps = grid_.n_steps();
    step_a_.resize(n_steps);
    const auto for_leg = [&](const CtsParams& leg, auto& inf, auto& cts, auto& fin) {
        if (kind_ == Kind::InfiniteExact) inf.resize(n_steps);
        else if (kind_ == Kind::InfiniteCtsOnly) cts.resize(n_steps);
        else fin.resize(n_steps);
        if (!leg.active()) return;
        for (std::size_t i = 0; i < n_steps; ++i) {
            const double dt = grid_.dt(i);
            const double a = std::exp(-params_.b * dt);
            switch (kind_) {
                case Kind::InfiniteExact: {
                    auto& s = inf[i];
                    const double m1 =
                        leg.c * (-std::expm1(-leg.alpha * params_.b * dt)) / (leg.alpha * params_.b);
                    s.x1 = detail::make_cts_plan(leg.alpha, leg.beta / a, m1);
                    s.lambda = remainder_intensity(leg, params_.b, dt);
                    s.gamma_shape = 1.0 - leg.alpha;
                    s.beta = leg.beta;
                    s.mixer = mixer_for(leg.alpha, a);
                    break;
                }
                case Kind::InfiniteCtsOnly: {
                    // approx2 replaces Z(dt) by a*L(dt); scaling a CTS law by a
                    // divides the tempering by a and multiplies the mass by a^alpha
                    const double m = scheme_ == Scheme::Approx1
                                         ? leg.c * (-std::expm1(-leg.alpha * params_.b * dt)) /
                                               (leg.alpha * params_.b)
                                         : leg.c * dt * std::pow(a, leg.alpha);
                    cts[i] = detail::make_cts_plan(leg.alpha, leg.beta / a, m);
                    break;
                }
                case Kind::Finite: {
                    auto& s = fin[i];
                    s.poisson_mean = finite_activity_rate(leg) * dt;
                    s.shape = -leg.alpha;
                    s.beta = leg.beta;
                    s.bdt = params_.b * dt;
                    s.active = true;
                    break;
                }
            }
        }
    };
    for (std::size_t i = 0; i < n_steps; ++i)
        step_a_[i] = std::exp(-params_.b * grid_.dt(i));
    for_leg(params_.pos, inf_pos_, cts_pos_, fin_pos_);
    for_leg(params_.neg, inf_neg_, cts_neg_, fin_neg_);
}

const RemainderVSampler* PathGenerator::mixer_for(double alpha, double a) {
    for (const auto& m : mixers_)
        if (m->v_max() == 1.0 / a && m->alpha() == alpha) return m.get();
    mixers_.push_back(std::make_unique<RemainderVSampler>(alpha, a));
    return mixers_.back().get();
}

double PathGenerator::step_z(std::size_t step, RngStream& rng) const {
    const auto leg_value = [&](const std::vector<InfiniteStep>& inf,
                               const std::vector<CtsPlan>& cts,
                               const std::vector<FiniteStep>& fin) -> double {
        switch (kind_) {
            case Kind::InfiniteExact: {
                const InfiniteStep& s = inf[step];
                if (s.x1.pieces == 0) return 0.0;
                return detail::draw_cts(s.x1, rng, nullptr) +
                       draw_remainder_block(s.lambda, s.gamma_shape, s.beta, *s.mixer, rng);
            }
            case Kind::InfiniteCtsOnly: {
                const CtsPlan& p = cts[step];
                return p.pieces == 0 ? 0.0 : detail::draw_cts(p, rng, nullptr);
            }
            default: {
                const FiniteStep& s = fin[step];
                if (!s.active) return 0.0;
                const long long n = rng.poisson(s.poisson_mean);
                double sum = 0.0;
                for (long long k = 0; k < n; ++k)
                    sum += rng.gamma(s.shape, s.beta * std::exp(s.bdt * rng.uniform01()));
                return sum;
            }
        }
        return 0.0;
    };
    return leg_value(inf_pos_, cts_pos_, fin_pos_) - leg_value(inf_neg_, cts_neg_, fin_neg_);
}

void PathGenerator::generate(double x0, RngStream& rng, std::vector<double>& out) const {
    out.resize(grid_.size());
    out[0] = x0;
    double x = x0;
    for (std::size_t i = 0; i < grid_.n_steps(); ++i) {
        x = step_a_[i] * x + step_z(i, rng);
        out[i + 1] = x;
    }
}

PathSkeleton PathGenerator::make_path(double x0, RngStream& rng) const {
    PathSkeleton path;
    path.grid = grid_;
    path.scheme = scheme_;
    generate(x0, rng, path.values);
    return path;
}

PathSkeleton simulate_skeleton(const BctsParams& params, const TimeGrid& grid, double x0,
                               Scheme scheme, RngStream& rng) {
    return PathGenerator(params, grid, scheme).make_path(x0, rng);
}

}  // namespace tsou
