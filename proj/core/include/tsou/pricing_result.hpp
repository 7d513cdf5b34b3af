#pragma once

#include <string>
#include <vector>

namespace tsou {

struct DateValue {
    double t = 0.0;
    double value = 0.0;
    double std_error = 0.0;  // 0 for deterministic (transform) methods
};

struct PricingResult {
    double value = 0.0;
    double std_error = 0.0;   // 0 for deterministic methods
    long long n_paths = 0;    // 0 for deterministic methods
    std::string method;       // e.g. "fft", "mc-exact", "lsmc"
    std::vector<DateValue> breakdown;  // per-settlement-date components, if any
};

}  // namespace tsou
