#pragma once

#include <complex>

namespace tsou {

using Complex = std::complex<double>;

// Gauss hypergeometric 2F1(1, 1; 1 - alpha; x) for alpha < 1, alpha != 0, and
// x off the branch cut [1, inf). Power series for |x| <= 0.8, Pfaff-transformed
// series for |x/(x-1)| <= 0.9, integral-representation quadrature otherwise.
Complex hyp2f1_11(double alpha, Complex x);

// I(u) = integral over z in [beta1, beta2] of z^(-1-alpha) (z - iu)^alpha dz,
// 0 < beta1 <= beta2. Closed form through hyp2f1_11 where the series apply;
// adaptive quadrature of the defining integral otherwise. I(0) = log(beta2/beta1).
// Complex u must keep z - iu in the right half-plane: Im(u) > -beta1.
Complex integral_I(Complex u, double alpha, double beta1, double beta2);

// Real variant integral over z of z^(-1-alpha) (z - s)^alpha dz for s < beta1,
// evaluated on a real-only code path (power series of the antiderivative).
// This is the building block of the cumulant-generating function.
double integral_I_real(double s, double alpha, double beta1, double beta2);

}  // namespace tsou
