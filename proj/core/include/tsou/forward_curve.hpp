#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tsou {

// Deterministic forward curve t |-> F(0,t), piecewise-constant on day buckets
// (energy-market convention) or flat. Prices are strictly positive.
class ForwardCurve {
public:
    // F(0,t) = level for all t.
    static ForwardCurve flat(double level);

    // Piecewise-constant curve from (day-offset, price) points. The price at
    // day d applies on [d, next offset) measured in days / day_count years;
    // queries before the first offset take the first price, queries at or
    // after the last offset take the last. Offsets must be strictly
    // increasing and prices positive.
    static ForwardCurve piecewise_daily(std::vector<std::pair<double, double>> points,
                                        int day_count = 360);

    // Two-column CSV: day-offset, price. Blank lines and lines starting with
    // '#' are skipped; one optional non-numeric header row is allowed.
    static ForwardCurve from_csv(const std::string& path, int day_count = 360);

    double operator()(double t) const;

    bool is_flat() const { return times_.empty(); }
    double flat_level() const { return flat_level_; }

private:
    ForwardCurve() = default;

    double flat_level_ = 0.0;          // used when times_ is empty
    std::vector<double> times_;        // bucket left edges, years, increasing
    std::vector<double> prices_;       // price on [times_[i], times_[i+1])
};

}  // namespace tsou
