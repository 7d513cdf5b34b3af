// Sampler throughput: one-step increments per scheme and regime, plus the
// inner building blocks (stable draw, residual-rate mixer).

#include <benchmark/benchmark.h>

#include <vector>

#include "tsou/params.hpp"
#include "tsou/rng.hpp"
#include "tsou/simulation.hpp"

namespace {

const tsou::BctsParams kBilateralHalf{tsou::CtsParams{0.5, 2.5, 0.5},
                                      tsou::CtsParams{0.5, 3.5, 1.0}, 0.1};
const tsou::BctsParams kCompoundPoisson =
    tsou::BctsParams::cgmy(80.0, 10.5, 15.5, -0.5, 25.0);

void bm_step_exact_infinite(benchmark::State& state) {
    const tsou::PathGenerator gen(kBilateralHalf, tsou::TimeGrid::uniform(0.0, 1.0 / 360.0, 1));
    tsou::RngStream rng(42, 0);
    std::vector<double> out;
    for (auto _ : state) {
        gen.generate(0.0, rng, out);
        benchmark::DoNotOptimize(out[1]);
    }
}
BENCHMARK(bm_step_exact_infinite);

void bm_step_approx1_infinite(benchmark::State& state) {
    const tsou::PathGenerator gen(kBilateralHalf, tsou::TimeGrid::uniform(0.0, 1.0 / 360.0, 1),
                                  tsou::Scheme::Approx1);
    tsou::RngStream rng(42, 0);
    std::vector<double> out;
    for (auto _ : state) {
        gen.generate(0.0, rng, out);
        benchmark::DoNotOptimize(out[1]);
    }
}
BENCHMARK(bm_step_approx1_infinite);

void bm_step_exact_compound_poisson(benchmark::State& state) {
    const tsou::PathGenerator gen(kCompoundPoisson, tsou::TimeGrid::uniform(0.0, 1.0 / 360.0, 1));
    tsou::RngStream rng(42, 0);
    std::vector<double> out;
    for (auto _ : state) {
        gen.generate(0.0, rng, out);
        benchmark::DoNotOptimize(out[1]);
    }
}
BENCHMARK(bm_step_exact_compound_poisson);

void bm_year_path_daily(benchmark::State& state) {
    const tsou::PathGenerator gen(kBilateralHalf, tsou::TimeGrid::daily_from_origin(360));
    tsou::RngStream rng(42, 0);
    std::vector<double> out;
    for (auto _ : state) {
        gen.generate(0.0, rng, out);
        benchmark::DoNotOptimize(out.back());
    }
}
BENCHMARK(bm_year_path_daily);

void bm_mixer_draw(benchmark::State& state) {
    const tsou::RemainderVSampler mixer(0.5, 0.6);
    tsou::RngStream rng(42, 0);
    for (auto _ : state) benchmark::DoNotOptimize(mixer.sample(rng));
}
BENCHMARK(bm_mixer_draw);

}  // namespace

BENCHMARK_MAIN();
