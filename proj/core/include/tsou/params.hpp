#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tsou {

// Activity regime of a tempered-stable leg. alpha in (0,1) gives an
// infinite-activity subordinator; alpha < 0 a compound-Poisson one.
// alpha == 0 and alpha in [1,2) are not supported.
enum class Regime { FiniteActivity, InfiniteActivity };

// One tempered-stable leg: Levy density c * exp(-beta*x) / x^(1+alpha) on x > 0.
// c == 0 marks an absent leg (one-sided processes).
struct CtsParams {
    double alpha = 0.5;
    double beta = 1.0;
    double c = 1.0;

    bool active() const { return c > 0.0; }

    Regime regime() const {
        return alpha < 0.0 ? Regime::FiniteActivity : Regime::InfiniteActivity;
    }

    void validate(const char* leg = "leg") const {
        const std::string who(leg);
        if (!(beta > 0.0))
            throw std::invalid_argument(who + ".beta must be > 0");
        if (!(c >= 0.0))
            throw std::invalid_argument(who + ".c must be >= 0");
        if (!(alpha < 1.0))
            throw std::invalid_argument(who + ".alpha must be < 1 (stability index range)");
        if (alpha == 0.0)
            throw std::invalid_argument(who + ".alpha == 0 is not supported");
    }
};

// Bilateral tempered-stable driver of an OU process dX = -b X dt + dL.
// Positive jumps tempered at pos.beta, negative jumps at neg.beta.
// CGMY(C,G,M,Y) maps to pos = {Y, M, C}, neg = {Y, G, C}.
struct BctsParams {
    CtsParams pos;
    CtsParams neg;
    double b = 1.0;  // mean-reversion rate, per year

    static BctsParams cgmy(double C, double G, double M, double Y, double b) {
        return BctsParams{CtsParams{Y, M, C}, CtsParams{Y, G, C}, b};
    }

    bool one_sided() const { return !pos.active() || !neg.active(); }

    bool is_cgmy() const {
        return pos.active() && neg.active() && pos.alpha == neg.alpha && pos.c == neg.c;
    }

    Regime regime() const { return pos.active() ? pos.regime() : neg.regime(); }

    void validate() const {
        if (!(b > 0.0))
            throw std::invalid_argument("b must be > 0");
        pos.validate("pos");
        neg.validate("neg");
        if (!pos.active() && !neg.active())
            throw std::invalid_argument("at least one leg must have c > 0");
        if (pos.active() && neg.active() && pos.regime() != neg.regime())
            throw std::invalid_argument("pos and neg legs must share the activity regime");
    }
};

// Strictly increasing observation times, in years (360-day convention for
// daily grids).
class TimeGrid {
  public:
    TimeGrid() = default;

    explicit TimeGrid(std::vector<double> times) : times_(std::move(times)) {
        if (times_.empty())
            throw std::invalid_argument("time grid must be non-empty");
        if (times_.front() < 0.0)
            throw std::invalid_argument("time grid must start at t >= 0");
        for (std::size_t i = 1; i < times_.size(); ++i)
            if (!(times_[i] > times_[i - 1]))
                throw std::invalid_argument("time grid must be strictly increasing");
    }

    // t0, t0+dt, ..., t0+n_steps*dt
    static TimeGrid uniform(double t0, double dt, int n_steps) {
        if (!(dt > 0.0) || n_steps < 1)
            throw std::invalid_argument("time grid needs dt > 0 and n_steps >= 1");
        std::vector<double> ts(static_cast<std::size_t>(n_steps) + 1);
        for (int i = 0; i <= n_steps; ++i) ts[static_cast<std::size_t>(i)] = t0 + i * dt;
        return TimeGrid(std::move(ts));
    }

    // 0, (offset+1)/day_count, ..., (offset+n)/day_count: simulation grid for n
    // daily settlements starting offset days from now.
    static TimeGrid daily_from_origin(int n, int offset_days = 0, int day_count = 360) {
        if (n < 1 || offset_days < 0 || day_count < 1)
            throw std::invalid_argument("daily grid needs n >= 1, offset >= 0, day_count >= 1");
        std::vector<double> ts;
        ts.reserve(static_cast<std::size_t>(n) + 1);
        ts.push_back(0.0);
        for (int i = 1; i <= n; ++i)
            ts.push_back(static_cast<double>(offset_days + i) / day_count);
        return TimeGrid(std::move(ts));
    }

    std::size_t size() const { return times_.size(); }
    double operator[](std::size_t i) const { return times_[i]; }
    double front() const { return times_.front(); }
    double back() const { return times_.back(); }
    double dt(std::size_t step) const { return times_[step + 1] - times_[step]; }
    std::size_t n_steps() const { return times_.size() - 1; }
    const std::vector<double>& times() const { return times_; }

  private:
    std::vector<double> times_;
};

struct CumulantSet {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
    double k4 = 0.0;

    double operator[](int k) const {
        switch (k) {
            case 1: return k1;
            case 2: return k2;
            case 3: return k3;
            case 4: return k4;
            default: throw std::invalid_argument("cumulant order must be 1..4");
        }
    }
};

}  // namespace tsou
