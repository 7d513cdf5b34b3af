#include "tsou/forward_noa.hpp"

#include <cmath>
#include <stdexcept>

#include "detail/quadrature.hpp"
#include "tsou/cumulants.hpp"
#include "tsou/transition_law.hpp"

namespace tsou {

void DeliveryPeriod::validate() const {
    if (!(t1 >= 0.0) || !(t2 > t1))
        throw std::invalid_argument("delivery period needs 0 <= T1 < T2");
}

double gamma1_loading(double u, const DeliveryPeriod& period, double gamma1_coeff, double b) {
    period.validate();
    if (!(u <= period.t1))
        throw std::invalid_argument("gamma1 loading is defined for u <= T1");
    if (!(b >= 0.0)) throw std::invalid_argument("b must be >= 0");
    const double width = period.t2 - period.t1;
    // gamma1 e^{-b(T1-u)} (1 - e^{-b width})/(b width), stable as b -> 0
    const double x = b * width;
    const double avg = x < 1e-12 ? 1.0 : -std::expm1(-x) / x;
    return gamma1_coeff * std::exp(-b * (period.t1 - u)) * avg;
}

double gamma2_average(const DeliveryPeriod& period,
                      const std::function<double(double)>& gamma_fn) {
    period.validate();
    if (!gamma_fn) return 0.0;
    const double total =
        detail::integrate<double>([&](double u) { return gamma_fn(u); }, period.t1, period.t2, 1e-10);
    return total / (period.t2 - period.t1);
}

Complex noa_factor_chf(double u, double t, double loading, const BctsParams& params) {
    return std::exp(psi_Z(loading * u, t, params));
}

void NoaSpec::validate() const {
    period.validate();
    if (grid.front() != 0.0)
        throw std::invalid_argument("noa grid must start at t = 0");
    if (!(grid.back() <= period.t1))
        throw std::invalid_argument("noa grid must end at or before delivery start T1");
    if (!(f0 > 0.0)) throw std::invalid_argument("noa f0 must be > 0");
}

namespace {

// Exact increment of a raw (no mean reversion) tempered-stable Levy leg.
double levy_leg_increment(const CtsParams& leg, double dt, RngStream& rng) {
    if (!leg.active() || dt == 0.0) return 0.0;
    if (leg.regime() == Regime::InfiniteActivity)
        return sample_cts(leg.alpha, leg.beta, leg.c * dt, rng);
    const long long n = rng.poisson(finite_activity_rate(leg) * dt);
    double sum = 0.0;
    for (long long k = 0; k < n; ++k) sum += rng.gamma(-leg.alpha, leg.beta);
    return sum;
}

}  // namespace

NoaGenerator::NoaGenerator(NoaSpec spec, BctsParams driver1, BctsParams driver2)
    : spec_(std::move(spec)),
      driver2_(std::move(driver2)),
      ou_(std::move(driver1), spec_.grid, Scheme::Exact) {
    spec_.validate();
    gamma2_ = gamma2_average(spec_.period, spec_.gamma_fn);
    if (gamma2_ != 0.0) driver2_.validate();
    const std::size_t n = spec_.grid.size();
    loading1_.resize(n);
    mean_z_.resize(n);
    mean_l2_.resize(n);
    const double c1 = gamma2_ != 0.0 ? levy_cumulant(driver2_, 1) : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = spec_.grid[i];
        loading1_[i] = gamma1_loading(t, spec_.period, spec_.gamma1_coeff, ou_.params().b);
        mean_z_[i] = t == 0.0 ? 0.0 : ou_cumulants(ou_.params(), 0.0, t).k1;
        mean_l2_[i] = c1 * t;
    }
}

PathSkeleton NoaGenerator::generate(RngStream& rng, std::vector<double>* factor1,
                                    std::vector<double>* factor2) const {
    const std::size_t n = spec_.grid.size();
    std::vector<double> z;
    ou_.generate(0.0, rng, z);

    PathSkeleton path;
    path.grid = spec_.grid;
    path.scheme = Scheme::Exact;
    path.values.resize(n);
    if (factor1) factor1->assign(n, 0.0);
    if (factor2) factor2->assign(n, 0.0);

    double l2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && gamma2_ != 0.0) {
            const double dt = spec_.grid.dt(i - 1);
            l2 += levy_leg_increment(driver2_.pos, dt, rng) -
                  levy_leg_increment(driver2_.neg, dt, rng);
        }
        const double f1 = loading1_[i] * (z[i] - mean_z_[i]);
        const double f2 = gamma2_ * (l2 - mean_l2_[i]);
        path.values[i] = spec_.f0 + f1 + f2;
        if (factor1) (*factor1)[i] = f1;
        if (factor2) (*factor2)[i] = f2;
    }
    return path;
}

PathSkeleton simulate_noa_future(const NoaSpec& spec, const BctsParams& driver1,
                                 const BctsParams& driver2, RngStream& rng) {
    return NoaGenerator(spec, driver1, driver2).generate(rng);
}

}  // namespace tsou
