#pragma once

#include <cstdint>
#include <vector>

#include "tsou/forward_curve.hpp"
#include "tsou/params.hpp"
#include "tsou/pricing_result.hpp"

namespace tsou {

// Swing contract with exactly `rights` unit-volume exercises (min = max)
// spread over daily exercise dates; per-exercise payoff (S - K)^+, so the
// obligation to use every right is costless and the optionality is in the
// timing.
struct SwingSpec {
    int n_dates = 360;
    int rights = 120;
    double strike = 20.0;
    double rate = 0.0;
    int day_count = 360;

    void validate() const;
    TimeGrid grid() const;  // {0} followed by the exercise dates
};

struct RegressionBasis {
    int degree = 3;  // power polynomial {1, z, ..., z^degree}

    void validate() const;
};

// Spot paths sampled on the exercise dates, row-major (path, date).
struct SpotMatrix {
    long long n_paths = 0;
    int n_dates = 0;
    std::vector<double> values;

    double at(long long path, int date) const {
        return values[static_cast<std::size_t>(path) * static_cast<std::size_t>(n_dates) +
                      static_cast<std::size_t>(date)];
    }
};

// Exact-scheme spot paths for the swing grid; stream_offset separates
// independent path sets drawn from one seed (policy-learning vs evaluation).
SpotMatrix swing_spot_paths(const SwingSpec& spec, const ForwardCurve& curve,
                            const BctsParams& params, long long n_paths, std::uint64_t seed,
                            std::uint64_t stream_offset = 0, int threads = 0);

// Least-squares Monte Carlo valuation by backward induction over
// (date, rights-remaining) layers. Continuation values are regressed on the
// centered/scaled power basis across all paths; the exercise policy learned
// on `learn` is revalued on the independent `eval` set (low-bias two-pass
// estimator). Rank-deficient regressions fall back to a lower degree with a
// warning on stderr.
PricingResult price_swing_with_paths(const SwingSpec& spec, const SpotMatrix& learn,
                                     const SpotMatrix& eval, const RegressionBasis& basis);

// Two-pass LSMC end to end: n_paths for the learning set and as many again
// for the evaluation set. Requires finite-activity params (the compound-
// Poisson regime this contract study targets).
PricingResult price_swing(const SwingSpec& spec, const ForwardCurve& curve,
                          const BctsParams& params, const RegressionBasis& basis,
                          long long n_paths, std::uint64_t seed, int threads = 0);

}  // namespace tsou
