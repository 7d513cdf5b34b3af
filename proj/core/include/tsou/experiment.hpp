#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsou/forward_noa.hpp"
#include "tsou/params.hpp"
#include "tsou/pricing_fft.hpp"
#include "tsou/simulation.hpp"

namespace tsou {

struct CumulantEstimate {
    CumulantSet value;      // mean of per-batch cumulants
    CumulantSet std_error;  // batch-means standard error
};

// Empirical cumulants of the one-step exact transition x = a x0 + Z(dt),
// estimated per 4096-path batch and averaged; SEs from the batch spread.
CumulantEstimate estimate_step_cumulants(const BctsParams& params, double x0, double dt,
                                         long long n_paths, std::uint64_t seed,
                                         int threads = 0);

struct StrikeSweep {
    double min = 10.0;
    double max = 30.0;
    int count = 41;
};

// Fully resolved experiment run: typed knobs plus the canonical config echo
// written into every output header. Defaults mirror the documented config
// grammar; parse functions fill the fields named in the file and reject
// unknown or ill-typed ones.
struct ExperimentConfig {
    std::string kind;  // cumulants | call-strip | asian | swing | noa-sim |
                       // strike-sweep | trajectories
    std::string echo;  // canonical JSON; re-parses to this same config
    std::string out_dir = ".";
    std::uint64_t seed = 12345;
    int threads = 0;
    long long n_paths = 100000;
    std::vector<long long> n_paths_list;  // multi-size studies (asian, swing)

    BctsParams model;
    double flat_level = 20.0;
    std::string curve_csv;  // when set, overrides the flat curve
    int day_count = 360;

    double dt = 1.0 / 12.0;  // cumulants
    double x0 = 0.0;

    double strike = 20.0;
    double rate = 0.0;
    int n_dates = 30;
    int forward_start_days = 0;
    FftConfig fft;
    std::optional<StrikeSweep> sweep;
    double t_single = 1.0 / 12.0;  // strike-sweep settlement date

    std::vector<Scheme> schemes{Scheme::Exact};

    int rights = 120;
    int basis_degree = 3;

    DeliveryPeriod period;
    double f0 = 20.0;
    double gamma1_coeff = 1.0;
    std::vector<std::pair<double, double>> gamma_steps;  // (from-time, level)
    std::optional<BctsParams> driver2;

    ForwardCurve curve() const;
};

struct ExperimentOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
};

ExperimentConfig parse_experiment_config(const std::string& json_text, const std::string& kind,
                                         const ExperimentOverrides& overrides = {});
ExperimentConfig load_experiment_config(const std::string& file, const std::string& kind,
                                        const ExperimentOverrides& overrides = {});

// Runs the experiment and writes its CSV artifacts under out_dir (created if
// missing). Throws std::invalid_argument for configuration problems and
// std::runtime_error / std::domain_error for numerical ones.
void run_experiment(const ExperimentConfig& config);

}  // namespace tsou
