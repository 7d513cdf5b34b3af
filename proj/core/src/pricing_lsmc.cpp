#include "tsou/pricing_lsmc.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <iostream>
#include <stdexcept>

#include "detail/parallel.hpp"
#include "tsou/rng.hpp"
#include "tsou/simulation.hpp"
#include "tsou/transition_law.hpp"

namespace tsou {

void SwingSpec::validate() const {
    if (n_dates < 1) throw std::invalid_argument("swing.n_dates must be >= 1");
    if (rights < 1 || rights > n_dates)
        throw std::invalid_argument("swing.rights must be in [1, n_dates]");
    if (!(strike >= 0.0)) throw std::invalid_argument("swing.strike must be >= 0");
    if (day_count < 1) throw std::invalid_argument("swing.day_count must be >= 1");
}

TimeGrid SwingSpec::grid() const {
    validate();
    return TimeGrid::daily_from_origin(n_dates, 0, day_count);
}

void RegressionBasis::validate() const {
    if (degree < 1 || degree > 6)
        throw std::invalid_argument("basis.degree must be in [1, 6]");
}

SpotMatrix swing_spot_paths(const SwingSpec& spec, const ForwardCurve& curve,
                            const BctsParams& params, long long n_paths, std::uint64_t seed,
                            std::uint64_t stream_offset, int threads) {
    spec.validate();
    const TimeGrid grid = spec.grid();
    const PathGenerator gen(params, grid, Scheme::Exact);
    std::vector<double> levels(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        levels[i] = std::log(curve(grid[i])) + risk_neutral_h(grid[i], params);

    SpotMatrix spots;
    spots.n_paths = n_paths;
    spots.n_dates = spec.n_dates;
    spots.values.resize(static_cast<std::size_t>(n_paths) *
                        static_cast<std::size_t>(spec.n_dates));
    detail::parallel_blocks(n_paths, threads, [&](long long blk, long long first, long long count) {
        RngStream rng(seed, stream_offset + static_cast<std::uint64_t>(blk));
        std::vector<double> path;
        for (long long p = 0; p < count; ++p) {
            gen.generate(0.0, rng, path);
            double* row = spots.values.data() +
                          static_cast<std::size_t>(first + p) * static_cast<std::size_t>(spec.n_dates);
            for (int d = 0; d < spec.n_dates; ++d)
                row[d] = std::exp(levels[static_cast<std::size_t>(d) + 1] +
                                  path[static_cast<std::size_t>(d) + 1]);
        }
    });
    return spots;
}

namespace {

// Per-date standardization so the power basis stays well conditioned.
struct DateScale {
    double mu = 0.0;
    double sigma = 1.0;

    double z(double s) const { return (s - mu) / sigma; }
};

DateScale date_scale(const SpotMatrix& spots, int date) {
    detail::Neumaier sum, sumsq;
    for (long long p = 0; p < spots.n_paths; ++p) {
        const double s = spots.at(p, date);
        sum.add(s);
        sumsq.add(s * s);
    }
    DateScale sc;
    sc.mu = sum.value() / static_cast<double>(spots.n_paths);
    const double var =
        std::max(0.0, sumsq.value() / static_cast<double>(spots.n_paths) - sc.mu * sc.mu);
    sc.sigma = var > 1e-300 ? std::sqrt(var) : 1.0;
    return sc;
}

// One fitted continuation function: value(z) = sum_k coef[k] z^k.
struct Fit {
    std::array<double, 7> coef{};  // padded to max degree + 1
    int degree = 0;

    double operator()(double z) const {
        double acc = coef[static_cast<std::size_t>(degree)];
        for (int k = degree - 1; k >= 0; --k) acc = acc * z + coef[static_cast<std::size_t>(k)];
        return acc;
    }
};

// Solves the normal equations from precomputed basis moments; drops the
// highest power until the factorization is numerically sane.
Fit solve_fit(const std::vector<double>& z_moments, const std::vector<double>& xty, int degree,
              bool& warned) {
    for (int deg = degree; deg >= 0; --deg) {
        const int dim = deg + 1;
        Eigen::MatrixXd xtx(dim, dim);
        Eigen::VectorXd rhs(dim);
        for (int r = 0; r < dim; ++r) {
            rhs(r) = xty[static_cast<std::size_t>(r)];
            for (int c = 0; c < dim; ++c)
                xtx(r, c) = z_moments[static_cast<std::size_t>(r + c)];
        }
        const auto ldlt = xtx.ldlt();
        const Eigen::VectorXd d = ldlt.vectorD();
        const double dmax = d.cwiseAbs().maxCoeff();
        if (ldlt.info() == Eigen::Success && d.minCoeff() > dmax * 1e-12) {
            Fit fit;
            fit.degree = deg;
            const Eigen::VectorXd beta = ldlt.solve(rhs);
            for (int k = 0; k < dim; ++k) fit.coef[static_cast<std::size_t>(k)] = beta(k);
            if (deg < degree && !warned) {
                std::cerr << "lsmc: rank-deficient regression, basis degree reduced to " << deg
                          << "\n";
                warned = true;
            }
            return fit;
        }
    }
    Fit fit;  // all-zero continuation: exercise decisions fall back to intrinsic
    if (!warned) {
        std::cerr << "lsmc: regression degenerate, using zero continuation\n";
        warned = true;
    }
    return fit;
}

struct Policy {
    std::vector<DateScale> scales;          // per date 0..M-1
    std::vector<std::vector<Fit>> fits;     // fits[m][k-1]: continuation with k
                                            // rights at date m+1, m = 0..M-2
};

}  // namespace

PricingResult price_swing_with_paths(const SwingSpec& spec, const SpotMatrix& learn,
                                     const SpotMatrix& eval, const RegressionBasis& basis) {
    spec.validate();
    basis.validate();
    if (learn.n_dates != spec.n_dates || eval.n_dates != spec.n_dates)
        throw std::invalid_argument("spot matrix date count must match the contract");
    if (learn.n_paths < 8 * (basis.degree + 1))
        throw std::invalid_argument("too few paths to stabilize the regression basis");

    const int M = spec.n_dates;
    const int N = spec.rights;
    const TimeGrid grid = spec.grid();
    std::vector<double> discount(static_cast<std::size_t>(M));
    for (int m = 0; m < M; ++m)
        discount[static_cast<std::size_t>(m)] = std::exp(-spec.rate * grid[static_cast<std::size_t>(m) + 1]);
    const auto pay = [&](const SpotMatrix& spots, long long p, int m) {
        return discount[static_cast<std::size_t>(m)] *
               std::max(spots.at(p, m) - spec.strike, 0.0);
    };

    // ---- pass 1: learn the policy backward over (date, rights) layers ----
    const long long np = learn.n_paths;
    const int l_max = N;  // rights never exceed N; later dates clamp lower
    // value[n][p]: realized value from the next date on with n rights left
    std::vector<std::vector<double>> value(static_cast<std::size_t>(l_max) + 1,
                                           std::vector<double>(static_cast<std::size_t>(np), 0.0));
    Policy policy;
    policy.scales.resize(static_cast<std::size_t>(M));
    policy.fits.resize(static_cast<std::size_t>(M) > 1 ? static_cast<std::size_t>(M - 1) : 0);
    bool warned = false;

    // terminal date: one right is worth the payoff, extra rights expire
    for (long long p = 0; p < np; ++p) value[1][static_cast<std::size_t>(p)] = pay(learn, p, M - 1);
    int l_next = 1;  // layers stored for the date just processed

    std::vector<double> zs(static_cast<std::size_t>(np));
    std::vector<double> z_moments(static_cast<std::size_t>(2 * basis.degree) + 1);
    std::vector<double> xty(static_cast<std::size_t>(basis.degree) + 1);

    for (int m = M - 2; m >= 0; --m) {
        const int l_here = std::min(N, M - m);  // dates remaining including m
        const DateScale sc = date_scale(learn, m);
        policy.scales[static_cast<std::size_t>(m)] = sc;

        // shared design moments for every layer's normal equations
        std::fill(z_moments.begin(), z_moments.end(), 0.0);
        for (long long p = 0; p < np; ++p) {
            const double z = sc.z(learn.at(p, m));
            zs[static_cast<std::size_t>(p)] = z;
            double zk = 1.0;
            for (std::size_t k = 0; k < z_moments.size(); ++k) {
                z_moments[k] += zk;
                zk *= z;
            }
        }
        auto& fits = policy.fits[static_cast<std::size_t>(m)];
        fits.resize(static_cast<std::size_t>(l_next));
        for (int k = 1; k <= l_next; ++k) {
            std::fill(xty.begin(), xty.end(), 0.0);
            const auto& v = value[static_cast<std::size_t>(k)];
            for (long long p = 0; p < np; ++p) {
                double zp = 1.0;
                for (std::size_t d = 0; d < xty.size(); ++d) {
                    xty[d] += zp * v[static_cast<std::size_t>(p)];
                    zp *= zs[static_cast<std::size_t>(p)];
                }
            }
            fits[static_cast<std::size_t>(k - 1)] = solve_fit(z_moments, xty, basis.degree, warned);
        }

        // realized-value update, descending so reads see the later date's layers
        for (int n = l_here; n >= 1; --n) {
            const Fit& keep = fits[static_cast<std::size_t>(std::min(n, l_next) - 1)];
            const Fit* drop = n >= 2 ? &fits[static_cast<std::size_t>(std::min(n - 1, l_next) - 1)]
                                     : nullptr;
            auto& v_n = value[static_cast<std::size_t>(n)];
            const auto& v_read = value[static_cast<std::size_t>(std::min(n, l_next))];
            const auto& v_read_m1 = value[static_cast<std::size_t>(std::min(n - 1, l_next))];
            for (long long p = 0; p < np; ++p) {
                const double z = zs[static_cast<std::size_t>(p)];
                const double pm = pay(learn, p, m);
                const bool ex = pm + (drop ? (*drop)(z) : 0.0) >= keep(z);
                v_n[static_cast<std::size_t>(p)] =
                    ex ? pm + v_read_m1[static_cast<std::size_t>(p)]
                       : v_read[static_cast<std::size_t>(p)];
            }
        }
        l_next = l_here;
    }

    // ---- pass 2: value the frozen policy on the independent path set ----
    detail::BlockMoments cash(detail::block_count(eval.n_paths));
    for (long long p = 0; p < eval.n_paths; ++p) {
        int n = N;
        double total = 0.0;
        for (int m = 0; m < M && n > 0; ++m) {
            const double pm = pay(eval, p, m);
            bool ex;
            if (m == M - 1) {
                ex = true;  // last chance: a right never hurts
            } else {
                const int stored = static_cast<int>(policy.fits[static_cast<std::size_t>(m)].size());
                const double z = policy.scales[static_cast<std::size_t>(m)].z(eval.at(p, m));
                const Fit& keep =
                    policy.fits[static_cast<std::size_t>(m)][static_cast<std::size_t>(std::min(n, stored) - 1)];
                const double drop_val =
                    n >= 2 ? policy.fits[static_cast<std::size_t>(m)]
                                        [static_cast<std::size_t>(std::min(n - 1, stored) - 1)](z)
                           : 0.0;
                ex = pm + drop_val >= keep(z);
            }
            if (ex) {
                total += pm;
                --n;
            }
        }
        cash.add(p / detail::kBlockSize, total);
    }

    const auto [mean, se] = cash.reduce(eval.n_paths);
    PricingResult result;
    result.value = mean;
    result.std_error = se;
    result.n_paths = eval.n_paths;
    result.method = "lsmc";
    return result;
}

PricingResult price_swing(const SwingSpec& spec, const ForwardCurve& curve,
                          const BctsParams& params, const RegressionBasis& basis,
                          long long n_paths, std::uint64_t seed, int threads) {
    params.validate();
    if (params.regime() != Regime::FiniteActivity)
        throw std::invalid_argument("swing valuation expects finite-activity params");
    const SpotMatrix learn = swing_spot_paths(spec, curve, params, n_paths, seed, 0, threads);
    const SpotMatrix eval =
        swing_spot_paths(spec, curve, params, n_paths, seed, std::uint64_t(1) << 32, threads);
    return price_swing_with_paths(spec, learn, eval, basis);
}

}  // namespace tsou
