// Transition-law evaluation cost: the closed-form exponent at real and
// complex arguments, the real cgf, and the underlying hypergeometric kernel.

#include <benchmark/benchmark.h>

#include "tsou/params.hpp"
#include "tsou/special_functions.hpp"
#include "tsou/transition_law.hpp"

namespace {

const tsou::BctsParams kBilateralHalf{tsou::CtsParams{0.5, 2.5, 0.5},
                                      tsou::CtsParams{0.5, 3.5, 1.0}, 0.1};
const tsou::BctsParams kCompoundPoisson{tsou::CtsParams{-0.5, 1.5, 0.3},
                                        tsou::CtsParams{-1.5, 2.5, 0.2}, 0.5};

void bm_psi_z_infinite(benchmark::State& state) {
    const tsou::TransitionLaw law(kBilateralHalf, 1.0 / 12.0);
    double u = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(law.psi_z(u));
        u += 0.1;  // defeat value caching without branching
    }
}
BENCHMARK(bm_psi_z_infinite);

void bm_psi_z_compound_poisson(benchmark::State& state) {
    const tsou::TransitionLaw law(kCompoundPoisson, 1.0 / 12.0);
    double u = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(law.psi_z(u));
        u += 0.1;
    }
}
BENCHMARK(bm_psi_z_compound_poisson);

void bm_cgf_z(benchmark::State& state) {
    const tsou::TransitionLaw law(kBilateralHalf, 1.0 / 12.0);
    double s = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(law.cgf_z(s));
        s = s < 2.0 ? s + 0.01 : 0.01;  // stay inside the exponential strip
    }
}
BENCHMARK(bm_cgf_z);

void bm_integral_kernel(benchmark::State& state) {
    double u = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tsou::integral_I(tsou::Complex(u, 0.0), 0.5, 2.4, 2.5));
        u += 0.1;
    }
}
BENCHMARK(bm_integral_kernel);

}  // namespace
