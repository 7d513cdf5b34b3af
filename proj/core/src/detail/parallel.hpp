#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

namespace tsou::detail {

// Paths are processed in fixed blocks of this size; block index doubles as
// the RNG stream id, so results are independent of the thread count.
constexpr long long kBlockSize = 4096;

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

inline long long block_count(long long n_items) {
    return (n_items + kBlockSize - 1) / kBlockSize;
}

// Runs fn(block_index, first_item, item_count) over all blocks, work-stealing
// by atomic counter. fn must write only into per-block slots; a deterministic
// reduction is the caller's job (iterate blocks in index order afterwards).
template <typename Fn>
void parallel_blocks(long long n_items, int threads, Fn&& fn) {
    const long long blocks = block_count(n_items);
    threads = std::min<long long>(resolve_threads(threads), blocks);
    if (threads <= 1) {
        for (long long blk = 0; blk < blocks; ++blk) {
            const long long first = blk * kBlockSize;
            fn(blk, first, std::min(kBlockSize, n_items - first));
        }
        return;
    }
    std::atomic<long long> next{0};
    auto worker = [&] {
        for (;;) {
            const long long blk = next.fetch_add(1);
            if (blk >= blocks) return;
            const long long first = blk * kBlockSize;
            fn(blk, first, std::min(kBlockSize, n_items - first));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// Neumaier compensated accumulator: order-stable to ~1 ulp for the block
// reductions used across the Monte Carlo code.
struct Neumaier {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

// Mean and standard error of per-item statistics accumulated blockwise:
// one (sum, sum of squares) pair per block, reduced in block order.
struct BlockMoments {
    std::vector<double> sums;
    std::vector<double> sumsq;

    explicit BlockMoments(long long blocks)
        : sums(static_cast<std::size_t>(blocks), 0.0),
          sumsq(static_cast<std::size_t>(blocks), 0.0) {}

    void add(long long block, double x) {
        sums[static_cast<std::size_t>(block)] += x;
        sumsq[static_cast<std::size_t>(block)] += x * x;
    }

    // returns {mean, standard error of the mean}
    std::pair<double, double> reduce(long long n) const {
        Neumaier s, s2;
        for (double v : sums) s.add(v);
        for (double v : sumsq) s2.add(v);
        const double mean = s.value() / static_cast<double>(n);
        const double var =
            std::max(0.0, s2.value() / static_cast<double>(n) - mean * mean);
        const double se = n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
        return {mean, se};
    }
};

}  // namespace tsou::detail
