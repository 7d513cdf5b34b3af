#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace tsou::detail {

// Nodes and weights of n-point Gauss-Legendre on [-1, 1], computed once by
// Newton iteration on the Legendre recurrence.
inline const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
    static const auto make = [](int m) {
        std::vector<double> x(static_cast<std::size_t>(m)), w(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            double xi = std::cos(M_PI * (i + 0.75) / (m + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = xi;
                for (int k = 2; k <= m; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = m * (xi * p1 - p0) / (xi * xi - 1.0);
                const double step = p1 / dp;
                xi -= step;
                if (std::abs(step) < 1e-15) break;
            }
            double p0 = 1.0, p1 = xi;
            for (int k = 2; k <= m; ++k) {
                const double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = m * (xi * p1 - p0) / (xi * xi - 1.0);
            x[static_cast<std::size_t>(i)] = xi;
            w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - xi * xi) * dp * dp);
        }
        return std::make_pair(std::move(x), std::move(w));
    };
    static const auto g16 = make(16);
    static const auto g32 = make(32);
    return n <= 16 ? g16 : g32;
}

template <typename F, typename R>
R gauss_panel(const F& f, double a, double b, int n) {
    const auto& [x, w] = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    R acc{};
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += R(w[i]) * f(mid + half * x[i]);
    return R(half) * acc;
}

// Adaptive bisection: accepts a panel once GL16 and GL32 agree to tol.
template <typename F, typename R>
R adaptive_impl(const F& f, double a, double b, double tol, int depth) {
    const R coarse = gauss_panel<F, R>(f, a, b, 16);
    const R fine = gauss_panel<F, R>(f, a, b, 32);
    if (std::abs(fine - coarse) <= tol * (1.0 + std::abs(fine)) || depth >= 24) return fine;
    const double mid = 0.5 * (a + b);
    return adaptive_impl<F, R>(f, a, mid, tol, depth + 1) +
           adaptive_impl<F, R>(f, mid, b, tol, depth + 1);
}

// Integrate f over [a, b] to relative tolerance tol, splitting into unit-width
// panels first so long ranges converge panel by panel.
template <typename R, typename F>
R integrate(const F& f, double a, double b, double tol = 1e-12) {
    if (!(b > a)) return R{};
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / 1.0)));
    R acc{};
    for (int i = 0; i < panels; ++i) {
        const double pa = a + (b - a) * i / panels;
        const double pb = a + (b - a) * (i + 1) / panels;
        acc += adaptive_impl<F, R>(f, pa, pb, tol, 0);
    }
    return acc;
}

}  // namespace tsou::detail
