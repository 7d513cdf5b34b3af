// End-to-end pricer cost at desk scale: one transform inversion, a strip
// reusing that inversion, and small Monte Carlo / regression runs.

#include <benchmark/benchmark.h>

#include <vector>

#include "tsou/forward_curve.hpp"
#include "tsou/params.hpp"
#include "tsou/pricing_fft.hpp"
#include "tsou/pricing_lsmc.hpp"
#include "tsou/pricing_mc.hpp"

namespace {

const tsou::BctsParams kBilateralHalf{tsou::CtsParams{0.5, 2.5, 0.5},
                                      tsou::CtsParams{0.5, 3.5, 1.0}, 0.1};
const tsou::BctsParams kCompoundPoisson =
    tsou::BctsParams::cgmy(80.0, 10.5, 15.5, -0.5, 25.0);

void bm_fft_single_call(benchmark::State& state) {
    const tsou::ForwardCurve flat = tsou::ForwardCurve::flat(20.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(tsou::price_call(20.0, 1.0 / 12.0, 0.0, flat, kBilateralHalf));
}
BENCHMARK(bm_fft_single_call);

void bm_fft_strike_sweep(benchmark::State& state) {
    const tsou::ForwardCurve flat = tsou::ForwardCurve::flat(20.0);
    std::vector<double> strikes;
    for (int i = 0; i <= 40; ++i) strikes.push_back(10.0 + 0.5 * i);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            tsou::price_calls(strikes, 1.0 / 12.0, 0.0, flat, kBilateralHalf));
}
BENCHMARK(bm_fft_strike_sweep);

void bm_mc_asian_block(benchmark::State& state) {
    const tsou::ForwardCurve flat = tsou::ForwardCurve::flat(20.0);
    tsou::AsianSpec spec;
    spec.n_dates = 30;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            tsou::price_asian(spec, flat, kBilateralHalf, tsou::Scheme::Exact, 4096, 42));
}
BENCHMARK(bm_mc_asian_block)->Unit(benchmark::kMillisecond);

void bm_lsmc_swing_small(benchmark::State& state) {
    const tsou::ForwardCurve flat = tsou::ForwardCurve::flat(20.0);
    tsou::SwingSpec spec;
    spec.n_dates = 60;
    spec.rights = 20;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            tsou::price_swing(spec, flat, kCompoundPoisson, tsou::RegressionBasis{3}, 2048, 42));
}
BENCHMARK(bm_lsmc_swing_small)->Unit(benchmark::kMillisecond);

}  // namespace
