#pragma once

#include "tsou/params.hpp"

namespace tsou {

// k-th cumulant of the driving Levy process at unit time:
//   c_p beta_p^(alpha_p - k) Gamma(k - alpha_p)
//   + (-1)^k c_n beta_n^(alpha_n - k) Gamma(k - alpha_n).
double levy_cumulant(const BctsParams& p, int k);

// Cumulants of X(t) given X(0) = x0 for dX = -bX dt + dL:
//   k1 = x0 e^(-bt) + c_{L,1} (1 - e^(-bt)) / b,
//   kk = c_{L,k} (1 - e^(-kbt)) / (kb)   for k >= 2.
CumulantSet ou_cumulants(const BctsParams& p, double x0, double t);

// Relative error (reference - estimate) / reference. Throws on reference == 0.
double err_pct(double reference, double estimate);

}  // namespace tsou
