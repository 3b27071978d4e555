#include "clayton/sampling.hpp"

#include <atomic>
#include <limits>
#include <thread>

namespace clayton {

namespace {

// One Marshall-Olkin row; clamps an underflowed psi value up to the
// smallest positive normal double so the open-interval invariant holds.
inline void draw_row(const ClaytonCopula& c, RngStream& r, double& out1,
                     double& out2, std::size_t& clamped) {
    const double e1 = r.next_exponential();
    const double e2 = r.next_exponential();
    const double v = r.next_gamma(1.0 / c.theta());
    constexpr double kMaxT = std::numeric_limits<double>::max();
    // e/v can overflow to inf for a degenerate V; psi of anything this
    // large underflows anyway, so cap the ratio at the largest finite t.
    double a = c.generator(std::min(e1 / v, kMaxT));
    double b = c.generator(std::min(e2 / v, kMaxT));
    constexpr double kMinNormal = std::numeric_limits<double>::min();
    if (a < kMinNormal) { a = kMinNormal; ++clamped; }
    if (b < kMinNormal) { b = kMinNormal; ++clamped; }
    out1 = a;
    out2 = b;
}

} // namespace

SampleMatrix sample(const ClaytonCopula& c, std::size_t n, RngStream& r) {
    if (n == 0) throw invalid_parameter("sample size must be >= 1");
    SampleMatrix m;
    m.u1.resize(n);
    m.u2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        draw_row(c, r, m.u1[i], m.u2[i], m.clamped);
    }
    return m;
}

SampleMatrix sample_parallel(const ClaytonCopula& c, std::size_t n,
                             std::uint64_t seed, std::size_t workers) {
    if (n == 0) throw invalid_parameter("sample size must be >= 1");
    if (workers == 0) throw invalid_parameter("worker count must be >= 1");

    SampleMatrix m;
    m.u1.resize(n);
    m.u2.resize(n);

    const std::size_t chunks = (n + kSampleChunkRows - 1) / kSampleChunkRows;
    std::vector<std::size_t> clamped_per_chunk(chunks, 0);

    auto fill_chunk = [&](std::size_t k) {
        RngStream r(seed, k);
        const std::size_t begin = k * kSampleChunkRows;
        const std::size_t end = std::min(begin + kSampleChunkRows, n);
        std::size_t clamped = 0;
        for (std::size_t i = begin; i < end; ++i) {
            draw_row(c, r, m.u1[i], m.u2[i], clamped);
        }
        clamped_per_chunk[k] = clamped;
    };

    const std::size_t pool = std::min(workers, chunks);
    if (pool <= 1) {
        for (std::size_t k = 0; k < chunks; ++k) fill_chunk(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (std::size_t w = 0; w < pool; ++w) {
            threads.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < chunks;
                     k = next.fetch_add(1)) {
                    fill_chunk(k);
                }
            });
        }
        for (auto& t : threads) t.join();
    }

    for (std::size_t k = 0; k < chunks; ++k) m.clamped += clamped_per_chunk[k];
    return m;
}

} // namespace clayton
