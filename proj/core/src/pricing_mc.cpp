#include "tsou/pricing_mc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "detail/parallel.hpp"
#include "tsou/rng.hpp"
#include "tsou/transition_law.hpp"

namespace tsou {

namespace {

// log F(0,t_i) + h(t_i) per grid point: S(t_i) = exp(level_i + X(t_i)).
std::vector<double> log_spot_levels(const TimeGrid& grid, const ForwardCurve& curve,
                                    const BctsParams& params) {
    std::vector<double> levels(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        levels[i] = std::log(curve(grid[i])) + risk_neutral_h(grid[i], params);
    return levels;
}

std::string mc_method_name(Scheme scheme) {
    return std::string("mc-") + scheme_name(scheme);
}

}  // namespace

void AsianSpec::validate() const {
    if (n_dates < 1) throw std::invalid_argument("asian.n_dates must be >= 1");
    if (forward_start_days < 0) throw std::invalid_argument("asian.forward_start_days must be >= 0");
    if (!(strike >= 0.0)) throw std::invalid_argument("asian.strike must be >= 0");
    if (day_count < 1) throw std::invalid_argument("asian.day_count must be >= 1");
}

TimeGrid AsianSpec::grid() const {
    validate();
    return TimeGrid::daily_from_origin(n_dates, forward_start_days, day_count);
}

PricingResult price_asian(const AsianSpec& spec, const ForwardCurve& curve,
                          const BctsParams& params, Scheme scheme, long long n_paths,
                          std::uint64_t seed, int threads) {
    spec.validate();
    if (n_paths < 2) throw std::invalid_argument("n_paths must be >= 2");
    const TimeGrid grid = spec.grid();
    const PathGenerator gen(params, grid, scheme);
    const std::vector<double> levels = log_spot_levels(grid, curve, params);
    const double discount = std::exp(-spec.rate * grid.back());
    const double inv_dates = 1.0 / static_cast<double>(spec.n_dates);

    detail::BlockMoments payoff(detail::block_count(n_paths));
    detail::parallel_blocks(n_paths, threads, [&](long long blk, long long, long long count) {
        RngStream rng(seed, static_cast<std::uint64_t>(blk));
        std::vector<double> path;
        for (long long p = 0; p < count; ++p) {
            gen.generate(0.0, rng, path);
            double avg = 0.0;
            for (std::size_t i = 1; i < grid.size(); ++i)
                avg += std::exp(levels[i] + path[i]);
            avg *= inv_dates;
            payoff.add(blk, discount * std::max(avg - spec.strike, 0.0));
        }
    });

    const auto [mean, se] = payoff.reduce(n_paths);
    PricingResult result;
    result.value = mean;
    result.std_error = se;
    result.n_paths = n_paths;
    result.method = mc_method_name(scheme);
    return result;
}

PricingResult mc_call_strip(const CallStripSpec& spec, const ForwardCurve& curve,
                            const BctsParams& params, Scheme scheme, long long n_paths,
                            std::uint64_t seed, int threads) {
    spec.validate();
    if (n_paths < 2) throw std::invalid_argument("n_paths must be >= 2");
    std::vector<double> times = spec.dates;
    times.insert(times.begin(), 0.0);
    const TimeGrid grid{std::vector<double>(times)};
    const PathGenerator gen(params, grid, scheme);
    const std::vector<double> levels = log_spot_levels(grid, curve, params);
    std::vector<double> discounts(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) discounts[i] = std::exp(-spec.rate * grid[i]);

    const long long blocks = detail::block_count(n_paths);
    const std::size_t n_dates = spec.dates.size();
    std::vector<detail::BlockMoments> per_date(n_dates, detail::BlockMoments(blocks));
    detail::BlockMoments strip(blocks);
    detail::parallel_blocks(n_paths, threads, [&](long long blk, long long, long long count) {
        RngStream rng(seed, static_cast<std::uint64_t>(blk));
        std::vector<double> path;
        for (long long p = 0; p < count; ++p) {
            gen.generate(0.0, rng, path);
            double total = 0.0;
            for (std::size_t i = 1; i < grid.size(); ++i) {
                const double pay =
                    discounts[i] * std::max(std::exp(levels[i] + path[i]) - spec.strike, 0.0);
                per_date[i - 1].add(blk, pay);
                total += pay;
            }
            strip.add(blk, total);
        }
    });

    PricingResult result;
    result.n_paths = n_paths;
    result.method = mc_method_name(scheme);
    for (std::size_t i = 0; i < n_dates; ++i) {
        const auto [mean, se] = per_date[i].reduce(n_paths);
        result.breakdown.push_back({spec.dates[i], mean, se});
    }
    const auto [mean, se] = strip.reduce(n_paths);
    result.value = mean;
    result.std_error = se;
    return result;
}

PricingResult mc_spot_mean(const TimeGrid& grid, const ForwardCurve& curve,
                           const BctsParams& params, long long n_paths, std::uint64_t seed,
                           int threads) {
    if (n_paths < 2) throw std::invalid_argument("n_paths must be >= 2");
    if (grid.n_steps() < 1) throw std::invalid_argument("grid needs at least one step");
    const PathGenerator gen(params, grid, Scheme::Exact);
    const std::vector<double> levels = log_spot_levels(grid, curve, params);

    const long long blocks = detail::block_count(n_paths);
    std::vector<detail::BlockMoments> per_point(grid.n_steps(), detail::BlockMoments(blocks));
    detail::parallel_blocks(n_paths, threads, [&](long long blk, long long, long long count) {
        RngStream rng(seed, static_cast<std::uint64_t>(blk));
        std::vector<double> path;
        for (long long p = 0; p < count; ++p) {
            gen.generate(0.0, rng, path);
            for (std::size_t i = 1; i < grid.size(); ++i)
                per_point[i - 1].add(blk, std::exp(levels[i] + path[i]));
        }
    });

    PricingResult result;
    result.n_paths = n_paths;
    result.method = "mc-spot";
    for (std::size_t i = 0; i < grid.n_steps(); ++i) {
        const auto [mean, se] = per_point[i].reduce(n_paths);
        result.breakdown.push_back({grid[i + 1], mean, se});
    }
    result.value = result.breakdown.back().value;
    result.std_error = result.breakdown.back().std_error;
    return result;
}

}  // namespace tsou
