#pragma once

#include <vector>

#include "tsou/forward_curve.hpp"
#include "tsou/params.hpp"
#include "tsou/pricing_result.hpp"
#include "tsou/special_functions.hpp"

namespace tsou {

// Frequency grid for the damped-transform inversion of European calls. The
// damping must keep the transform integrable: alpha_cm + 1 < beta_p when
// positive jumps are present (the moment E[S^{1+alpha_cm}] has to exist).
struct FftConfig {
    double alpha_cm = 0.0;  // 0 -> auto: min(0.75 (beta_p - 1), 1.5)
    int n = 4096;           // grid size, power of two
    double eta = 0.25;      // frequency spacing; truncation at n*eta

    double resolved_alpha(const BctsParams& params) const;
    void validate(const BctsParams& params) const;
};

// A strip of daily European calls: one option per settlement date, common
// strike, values summed across dates.
struct CallStripSpec {
    std::vector<double> dates;  // settlement times, strictly increasing, > 0
    double strike = 20.0;
    double rate = 0.0;  // continuously compounded discount rate, per year

    void validate() const;
};

// chf of log S(t) under the martingale drift: exp(iu [log F(0,t) + h(t)]
// + psi_Z(u,t)); equals 1 at u = 0 and F(0,t) at u = -i.
Complex log_spot_chf(Complex u, double t, const ForwardCurve& curve, const BctsParams& params);

// One European call: Simpson-weighted damped-transform quadrature evaluated
// at the exact log-strike. strike == 0 returns the analytic forward value.
double price_call(double strike, double t, double rate, const ForwardCurve& curve,
                  const BctsParams& params, const FftConfig& fft = {});

// Shares one transform build across the strike set; each strike is then an
// O(n) evaluation of the same quadrature at its own log-strike.
std::vector<double> price_calls(const std::vector<double>& strikes, double t, double rate,
                                const ForwardCurve& curve, const BctsParams& params,
                                const FftConfig& fft = {});

// Whole strip; breakdown carries one entry per settlement date.
PricingResult price_call_strip(const CallStripSpec& spec, const ForwardCurve& curve,
                               const BctsParams& params, const FftConfig& fft = {});

}  // namespace tsou
