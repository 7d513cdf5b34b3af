#include "tsou/transition_law.hpp"

#include <cmath>
#include <stdexcept>

#include "tsou/cumulants.hpp"

namespace tsou {

namespace {
constexpr double kStripGuard = 1e-12;
}

TransitionLaw::TransitionLaw(BctsParams params, double t) : params_(std::move(params)), t_(t) {
    params_.validate();
    if (!(t >= 0.0)) throw std::invalid_argument("horizon t must be >= 0");
    log_a_ = -params_.b * t_;
    a_ = std::exp(log_a_);
}

// One driver leg: psi_leg(u) = -c beta^alpha Gamma(1-alpha)/(alpha b) *
// [ I(u, alpha, beta, beta/a) + log a ]. The same closed form covers both
// activity regimes.
Complex TransitionLaw::leg_psi(Complex u, const CtsParams& leg) const {
    if (!leg.active() || t_ == 0.0) return Complex(0.0);
    const double coef =
        -leg.c * std::pow(leg.beta, leg.alpha) * std::tgamma(1.0 - leg.alpha) / (leg.alpha * params_.b);
    return coef * (integral_I(u, leg.alpha, leg.beta, leg.beta / a_) + log_a_);
}

double TransitionLaw::leg_cgf(double s, const CtsParams& leg) const {
    if (!leg.active() || t_ == 0.0) return 0.0;
    const double coef =
        -leg.c * std::pow(leg.beta, leg.alpha) * std::tgamma(1.0 - leg.alpha) / (leg.alpha * params_.b);
    return coef * (integral_I_real(s, leg.alpha, leg.beta, leg.beta / a_) + log_a_);
}

Complex TransitionLaw::psi_z(Complex u) const {
    if (u == Complex(0.0)) return Complex(0.0);
    if (u.real() == 0.0) return Complex(cgf_z(-u.imag()), 0.0);
    if (params_.pos.active() && !(u.imag() > -params_.pos.beta))
        throw std::domain_error("psi_z: Im(u) <= -beta_p");
    if (params_.neg.active() && !(u.imag() < params_.neg.beta))
        throw std::domain_error("psi_z: Im(u) >= beta_n");
    return leg_psi(u, params_.pos) + leg_psi(-u, params_.neg);
}

Complex TransitionLaw::phi_x(Complex u, double x0) const {
    return std::exp(Complex(0.0, 1.0) * u * (x0 * a_) + psi_z(u));
}

double TransitionLaw::cgf_z(double s) const {
    if (params_.pos.active() && !(s < params_.pos.beta - kStripGuard))
        throw std::domain_error("cgf_z: s too close to beta_p (strip boundary)");
    if (params_.neg.active() && !(s > -params_.neg.beta + kStripGuard))
        throw std::domain_error("cgf_z: s too close to -beta_n (strip boundary)");
    return leg_cgf(s, params_.pos) + leg_cgf(-s, params_.neg);
}

CumulantSet TransitionLaw::cumulants(double x0) const { return ou_cumulants(params_, x0, t_); }

Complex psi_Z_pos(double u, double t, const CtsParams& leg, double b) {
    BctsParams p;
    p.pos = leg;
    p.neg.c = 0.0;
    p.b = b;
    return TransitionLaw(p, t).psi_z(u);
}

Complex psi_Z(double u, double t, const BctsParams& params) {
    return TransitionLaw(params, t).psi_z(u);
}

Complex phi_X(double u, double t, double x0, const BctsParams& params) {
    return TransitionLaw(params, t).phi_x(u, x0);
}

double cgf_Z(double s, double t, const BctsParams& params) {
    return TransitionLaw(params, t).cgf_z(s);
}

double risk_neutral_h(double t, const BctsParams& params) {
    if (params.pos.active() && !(params.pos.beta > 1.0))
        throw std::domain_error("risk-neutral drift needs beta_p > 1 for E[exp(Z)] to exist");
    return -cgf_Z(1.0, t, params);
}

double spot_price(double x, double t, const ForwardCurve& curve, const BctsParams& params) {
    return curve(t) * std::exp(risk_neutral_h(t, params) + x);
}

}  // namespace tsou
