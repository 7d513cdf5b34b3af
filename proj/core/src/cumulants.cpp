#include "tsou/cumulants.hpp"

#include <cmath>
#include <stdexcept>

namespace tsou {

double levy_cumulant(const BctsParams& p, int k) {
    p.validate();
    if (k < 1) throw std::invalid_argument("cumulant order must be >= 1");
    double out = 0.0;
    if (p.pos.active())
        out += p.pos.c * std::pow(p.pos.beta, p.pos.alpha - k) * std::tgamma(k - p.pos.alpha);
    if (p.neg.active()) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        out += sign * p.neg.c * std::pow(p.neg.beta, p.neg.alpha - k) * std::tgamma(k - p.neg.alpha);
    }
    return out;
}

CumulantSet ou_cumulants(const BctsParams& p, double x0, double t) {
    p.validate();
    if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
    CumulantSet out;
    out.k1 = x0 * std::exp(-p.b * t) +
             levy_cumulant(p, 1) * (-std::expm1(-p.b * t)) / p.b;
    out.k2 = levy_cumulant(p, 2) * (-std::expm1(-2.0 * p.b * t)) / (2.0 * p.b);
    out.k3 = levy_cumulant(p, 3) * (-std::expm1(-3.0 * p.b * t)) / (3.0 * p.b);
    out.k4 = levy_cumulant(p, 4) * (-std::expm1(-4.0 * p.b * t)) / (4.0 * p.b);
    return out;
}

double err_pct(double reference, double estimate) {
    if (reference == 0.0)
        throw std::domain_error("err_pct undefined for a zero reference value");
    return (reference - estimate) / reference;
}

}  // namespace tsou
