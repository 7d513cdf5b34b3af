#pragma once

#include <cstdint>
#include <random>

namespace tsou {

// One reproducible random stream: (seed, stream_id) fully determines the
// sequence, independent of every other stream and of the thread layout.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream_id),
                          static_cast<std::uint32_t>(stream_id >> 32)};
        engine_.seed(seq);
    }

    // Open interval (0,1): never returns an exact endpoint.
    double uniform01() {
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        double u;
        do {
            u = dist(engine_);
        } while (u <= 0.0);
        return u;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    double exponential(double rate = 1.0) {
        return std::exponential_distribution<double>(rate)(engine_);
    }

    long long poisson(double mean) {
        return std::poisson_distribution<long long>(mean)(engine_);
    }

    double gamma(double shape, double rate) {
        return std::gamma_distribution<double>(shape, 1.0 / rate)(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace tsou
