#pragma once

#include <cstdint>

#include "tsou/forward_curve.hpp"
#include "tsou/params.hpp"
#include "tsou/pricing_fft.hpp"
#include "tsou/pricing_result.hpp"
#include "tsou/simulation.hpp"

namespace tsou {

// Arithmetic-average call with European exercise over daily settlement
// dates, optionally forward-started: payoff (mean_i S(t_i) - K)^+ at t_I.
struct AsianSpec {
    int n_dates = 90;            // number of daily settlement dates
    int forward_start_days = 0;  // days between now and the first date
    double strike = 20.0;
    double rate = 0.0;
    int day_count = 360;

    void validate() const;
    TimeGrid grid() const;  // {0} followed by the settlement dates
};

// Monte Carlo pricers simulate paths in fixed 4096-path blocks; the block
// index is the RNG stream id, so values are reproducible and independent of
// the thread count (threads == 0 means use all hardware threads).
PricingResult price_asian(const AsianSpec& spec, const ForwardCurve& curve,
                          const BctsParams& params, Scheme scheme, long long n_paths,
                          std::uint64_t seed, int threads = 0);

// Monte Carlo counterpart of the transform strip pricer: per-date European
// call values and standard errors from one common set of paths.
PricingResult mc_call_strip(const CallStripSpec& spec, const ForwardCurve& curve,
                            const BctsParams& params, Scheme scheme, long long n_paths,
                            std::uint64_t seed, int threads = 0);

// MC mean of the spot at every grid point past t_0 (martingale diagnostic:
// each mean should match F(0,t_i) within noise).
PricingResult mc_spot_mean(const TimeGrid& grid, const ForwardCurve& curve,
                           const BctsParams& params, long long n_paths, std::uint64_t seed,
                           int threads = 0);

}  // namespace tsou
