#pragma once

#include "tsou/forward_curve.hpp"
#include "tsou/params.hpp"
#include "tsou/special_functions.hpp"

namespace tsou {

// Exact transition law of the mean-reverting process X over a horizon t:
// X(t) = x0 e^{-bt} + Z(t) with Z(t) the integrated tempered-stable driver.
// Immutable after construction; all evaluations are pure and thread-safe.
class TransitionLaw {
public:
    TransitionLaw(BctsParams params, double t);

    const BctsParams& params() const { return params_; }
    double horizon() const { return t_; }
    double a() const { return a_; }  // e^{-bt}

    // Log-chf of Z(t) at real or complex u. Complex arguments must satisfy
    // -beta_p < Im(u) < beta_n (active legs only); pure-imaginary arguments
    // route through the real CGF path.
    Complex psi_z(double u) const { return psi_z(Complex(u, 0.0)); }
    Complex psi_z(Complex u) const;

    // chf of X(t) given X(0) = x0.
    Complex phi_x(double u, double x0) const { return phi_x(Complex(u, 0.0), x0); }
    Complex phi_x(Complex u, double x0) const;

    // CGF of Z(t); the strip is -beta_n < s < beta_p (active legs only),
    // enforced with a small guard margin away from the boundary singularities.
    double cgf_z(double s) const;

    CumulantSet cumulants(double x0) const;

private:
    Complex leg_psi(Complex u, const CtsParams& leg) const;
    double leg_cgf(double s, const CtsParams& leg) const;

    BctsParams params_;
    double t_;
    double a_;      // e^{-bt}
    double log_a_;  // -bt, kept exact rather than log(a_)
};

// Free-function forms of the same law.
Complex psi_Z_pos(double u, double t, const CtsParams& leg, double b);
Complex psi_Z(double u, double t, const BctsParams& params);
Complex phi_X(double u, double t, double x0, const BctsParams& params);
double cgf_Z(double s, double t, const BctsParams& params);

// Drift correction h(t) = -cgf_Z(1,t) making the discounted-forward spot a
// martingale: E[S(t)] = F(0,t). Needs beta_p > 1 when the positive leg is
// active (otherwise E[e^{Z}] diverges).
double risk_neutral_h(double t, const BctsParams& params);

// S(t) = F(0,t) exp(h(t) + x) with x the state of X at time t, X(0) = 0.
double spot_price(double x, double t, const ForwardCurve& curve, const BctsParams& params);

}  // namespace tsou
