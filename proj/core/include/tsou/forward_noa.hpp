#pragma once

#include <functional>
#include <vector>

#include "tsou/params.hpp"
#include "tsou/rng.hpp"
#include "tsou/simulation.hpp"
#include "tsou/special_functions.hpp"

namespace tsou {

struct DeliveryPeriod {
    double t1 = 1.0;
    double t2 = 2.0;

    void validate() const;
};

// Samuelson loading of the mean-reverting factor on a delivery-period future:
// gamma1/(b (T2-T1)) (e^{-b(T1-u)} - e^{-b(T2-u)}), continuous in the b -> 0
// and T2 -> T1 limits. Defined for evaluation times u <= T1.
double gamma1_loading(double u, const DeliveryPeriod& period, double gamma1_coeff, double b);

// Period average of an instantaneous loading: gamma2 = mean of gamma_fn over
// [T1, T2] by adaptive quadrature.
double gamma2_average(const DeliveryPeriod& period, const std::function<double(double)>& gamma_fn);

// chf of the scaled factor loading * Z(t): exp(psi_Z(loading u, t)).
Complex noa_factor_chf(double u, double t, double loading, const BctsParams& params);

// Additive two-factor future model over a delivery period: a Samuelson-damped
// mean-reverting factor plus a period-averaged Levy factor, both centered, so
// F(t) = F0 + Gamma1(t)(Z1(t) - E Z1(t)) + Gamma2 (L2(t) - E L2(t)).
struct NoaSpec {
    DeliveryPeriod period;
    TimeGrid grid{std::vector<double>{0.0, 0.5}};  // starts at 0, ends <= T1
    double f0 = 20.0;
    double gamma1_coeff = 1.0;
    std::function<double(double)> gamma_fn;  // null disables the second factor

    void validate() const;
};

class NoaGenerator {
public:
    // driver2's mean-reversion rate is ignored: the second factor is a raw
    // Levy process of the same leg family.
    NoaGenerator(NoaSpec spec, BctsParams driver1, BctsParams driver2);

    // factor1/factor2, when given, receive the two centered factor paths.
    PathSkeleton generate(RngStream& rng, std::vector<double>* factor1 = nullptr,
                          std::vector<double>* factor2 = nullptr) const;

    double gamma2() const { return gamma2_; }
    const std::vector<double>& loadings() const { return loading1_; }
    const NoaSpec& spec() const { return spec_; }

private:
    NoaSpec spec_;
    BctsParams driver2_;
    PathGenerator ou_;
    double gamma2_ = 0.0;
    std::vector<double> loading1_;  // Gamma1(t_i)
    std::vector<double> mean_z_;    // E Z1(t_i)
    std::vector<double> mean_l2_;   // E L2(t_i)
};

PathSkeleton simulate_noa_future(const NoaSpec& spec, const BctsParams& driver1,
                                 const BctsParams& driver2, RngStream& rng);

}  // namespace tsou
