#include "tsou/forward_curve.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tsou {

ForwardCurve ForwardCurve::flat(double level) {
    if (!(level > 0.0)) throw std::invalid_argument("forward curve level must be > 0");
    ForwardCurve c;
    c.flat_level_ = level;
    return c;
}

ForwardCurve ForwardCurve::piecewise_daily(std::vector<std::pair<double, double>> points,
                                           int day_count) {
    if (points.empty()) throw std::invalid_argument("forward curve needs at least one point");
    if (day_count <= 0) throw std::invalid_argument("day_count must be > 0");
    ForwardCurve c;
    c.times_.reserve(points.size());
    c.prices_.reserve(points.size());
    for (const auto& [day, price] : points) {
        if (!c.times_.empty() && !(day / day_count > c.times_.back()))
            throw std::invalid_argument("forward curve offsets must be strictly increasing");
        if (!(price > 0.0)) throw std::invalid_argument("forward curve prices must be > 0");
        c.times_.push_back(day / day_count);
        c.prices_.push_back(price);
    }
    return c;
}

ForwardCurve ForwardCurve::from_csv(const std::string& path, int day_count) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open forward curve file: " + path);
    std::vector<std::pair<double, double>> points;
    std::string line;
    bool first_row = true;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::string row = line.substr(start);
        std::replace(row.begin(), row.end(), ',', ' ');
        std::istringstream fields(row);
        double day = 0.0, price = 0.0;
        if (!(fields >> day >> price)) {
            if (first_row) {  // tolerate a single header row
                first_row = false;
                continue;
            }
            throw std::invalid_argument("malformed forward curve row: " + line);
        }
        first_row = false;
        points.emplace_back(day, price);
    }
    if (points.empty())
        throw std::invalid_argument("forward curve file has no data rows: " + path);
    return piecewise_daily(std::move(points), day_count);
}

double ForwardCurve::operator()(double t) const {
    if (times_.empty()) return flat_level_;
    // last bucket edge <= t; queries before the first edge take the first price
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    const auto idx = it == times_.begin() ? 0 : (it - times_.begin() - 1);
    return prices_[static_cast<std::size_t>(idx)];
}

}  // namespace tsou
