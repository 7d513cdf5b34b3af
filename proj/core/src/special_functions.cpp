#include "tsou/special_functions.hpp"

#include <cmath>
#include <stdexcept>

#include "detail/quadrature.hpp"

namespace tsou {

namespace {

constexpr int kMaxTerms = 6000;

void check_alpha(double alpha) {
    if (!(alpha < 1.0) || alpha == 0.0)
        throw std::invalid_argument("alpha must satisfy alpha < 1, alpha != 0");
}

bool on_cut(const Complex& x) { return x.imag() == 0.0 && x.real() >= 1.0; }

// 2F1(1,1;1-a;x) = sum_n n!/(1-a)_n x^n, |x| < 1.
Complex series_direct(double alpha, Complex x) {
    Complex sum = 1.0, term = 1.0;
    for (int n = 1; n < kMaxTerms; ++n) {
        term *= x * (static_cast<double>(n) / (n - alpha));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// Pfaff transform: 2F1(1,1;1-a;x) = (1-x)^(-1) 2F1(1,-a;1-a;w), w = x/(x-1),
// and 2F1(1,-a;1-a;w) = -a sum_n w^n/(n-a).
Complex series_pfaff(double alpha, Complex x, Complex w) {
    Complex sum = 1.0 / (-alpha), wn = 1.0;
    for (int n = 1; n < kMaxTerms; ++n) {
        wn *= w;
        sum += wn / (n - alpha);
        if (std::abs(wn) < 1e-17 * std::abs(sum) * (n - alpha)) break;
    }
    return -alpha * sum / (1.0 - x);
}

// Integral representation valid off the cut, mild endpoint singularity removed
// by t = s^(1/(1-a)):
//   2F1(1,1;1-a;x) = (1-x)^(-1) [1 - (a w/(1-a)) int_0^1 ds / (1 - w s^(1/(1-a)))].
Complex integral_rep(double alpha, Complex x, Complex w) {
    const double p = 1.0 / (1.0 - alpha);
    const auto f = [&](double s) { return 1.0 / (1.0 - w * std::pow(s, p)); };
    const Complex integral = detail::integrate<Complex>(f, 0.0, 1.0, 1e-13);
    return (1.0 - alpha * w * p * integral) / (1.0 - x);
}

enum class Route { Direct, Pfaff, Quadrature };

Route pick_route(double /*alpha*/, const Complex& x) {
    if (std::abs(x) <= 0.8) return Route::Direct;
    if (std::abs(x / (x - 1.0)) <= 0.9) return Route::Pfaff;
    return Route::Quadrature;
}

Complex hyp_eval(double alpha, Complex x, Route route) {
    switch (route) {
        case Route::Direct: return series_direct(alpha, x);
        case Route::Pfaff: return series_pfaff(alpha, x, x / (x - 1.0));
        default: return integral_rep(alpha, x, x / (x - 1.0));
    }
}

}  // namespace

Complex hyp2f1_11(double alpha, Complex x) {
    check_alpha(alpha);
    if (on_cut(x))
        throw std::domain_error("hyp2f1_11: x on the branch cut [1, inf)");
    return hyp_eval(alpha, x, pick_route(alpha, x));
}

Complex integral_I(Complex u, double alpha, double beta1, double beta2) {
    check_alpha(alpha);
    if (!(beta1 > 0.0) || !(beta2 >= beta1))
        throw std::invalid_argument("integral_I needs 0 < beta1 <= beta2");
    if (!(u.imag() > -beta1))
        throw std::domain_error("integral_I needs Im(u) > -beta1");
    if (beta2 == beta1) return Complex(0.0);
    if (u == Complex(0.0)) return Complex(std::log(beta2 / beta1));

    const Complex x1 = Complex(0.0, -beta1) / u;
    const Complex x2 = Complex(0.0, -beta2) / u;
    const Route r1 = pick_route(alpha, x1);
    const Route r2 = pick_route(alpha, x2);
    if (r1 != Route::Quadrature && r2 != Route::Quadrature) {
        const auto endpoint = [&](double beta, const Complex& x, Route r) {
            return std::pow(beta, -alpha) * std::pow(beta - Complex(0.0, 1.0) * u, alpha + 1.0) *
                   hyp_eval(alpha, x, r);
        };
        return Complex(0.0, -1.0) / (alpha * u) *
               (endpoint(beta2, x2, r2) - endpoint(beta1, x1, r1));
    }

    // Defining integral on y = log z; integrand is analytic on the path.
    const Complex iu = Complex(0.0, 1.0) * u;
    const auto f = [&](double y) {
        return std::exp(-alpha * y) * std::pow(std::exp(y) - iu, alpha);
    };
    return detail::integrate<Complex>(f, std::log(beta1), std::log(beta2), 1e-13);
}

double integral_I_real(double s, double alpha, double beta1, double beta2) {
    check_alpha(alpha);
    if (!(beta1 > 0.0) || !(beta2 >= beta1))
        throw std::invalid_argument("integral_I_real needs 0 < beta1 <= beta2");
    if (!(s < beta1))
        throw std::domain_error("integral_I_real: s >= beta1 (divergence boundary)");
    if (beta2 == beta1) return 0.0;
    if (s == 0.0) return std::log(beta2 / beta1);

    if (s > 0.0) {
        // t = s/z maps the integrand to t^(-1) (1-t)^alpha on [s/beta2, s/beta1];
        // antiderivative log t + sum_m c_m t^m / m with (1-t)^alpha = sum c_m t^m.
        const double th = s / beta1, tl = s / beta2;
        if (th > 0.95) {
            const auto g = [&](double y) {
                return std::exp(-alpha * y) * std::pow(std::exp(y) - s, alpha);
            };
            return detail::integrate<double>(g, std::log(beta1), std::log(beta2), 1e-13);
        }
        const auto P = [&](double t) {
            double cm = -alpha, tp = t, acc = 0.0;
            for (int m = 1; m < kMaxTerms; ++m) {
                acc += cm * tp / m;
                cm *= (m - alpha) / (m + 1.0);
                tp *= t;
                if (std::abs(cm * tp) < 1e-17 * (1.0 + std::abs(acc)) * (m + 1.0)) break;
            }
            return acc;
        };
        return std::log(beta2 / beta1) + P(th) - P(tl);
    }

    // s < 0: t = |s|/(|s|+z) maps the integrand to t^(-1) (1-t)^(-1-alpha);
    // antiderivative log t + sum_m d_m t^m / m with (1-t)^(-1-alpha) = sum d_m t^m.
    const double sg = -s;
    const double th = sg / (sg + beta1), tl = sg / (sg + beta2);
    if (th > 0.97) {
        const auto g = [&](double y) {
            return std::exp(-alpha * y) * std::pow(std::exp(y) + sg, alpha);
        };
        return detail::integrate<double>(g, std::log(beta1), std::log(beta2), 1e-13);
    }
    const auto Q = [&](double t) {
        double dm = 1.0 + alpha, tp = t, acc = 0.0;
        for (int m = 1; m < kMaxTerms; ++m) {
            acc += dm * tp / m;
            dm *= (m + 1.0 + alpha) / (m + 1.0);
            tp *= t;
            if (std::abs(dm * tp) < 1e-17 * (1.0 + std::abs(acc)) * (m + 1.0)) break;
        }
        return acc;
    };
    return std::log(th / tl) + Q(th) - Q(tl);
}

}  // namespace tsou
