#include "clayton/studies.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "clayton/copula.hpp"
#include "clayton/estimation.hpp"
#include "clayton/sampling.hpp"

namespace clayton {

std::vector<double> linear_grid(double lo, double hi, std::size_t k) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw invalid_parameter("grid requires finite lo < hi");
    }
    if (k < 2) throw invalid_parameter("grid requires k >= 2");
    std::vector<double> grid(k);
    const double step = (hi - lo) / static_cast<double>(k - 1);
    for (std::size_t i = 0; i < k; ++i) {
        grid[i] = lo + static_cast<double>(i) * step;
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<RecoveryRecord> run_recovery(const std::vector<double>& grid,
                                         std::size_t n, std::uint64_t seed,
                                         std::size_t workers) {
    if (grid.empty()) throw invalid_parameter("empty theta grid");
    if (n < 2) throw invalid_parameter("recovery requires n >= 2");
    if (workers == 0) throw invalid_parameter("worker count must be >= 1");
    for (double t : grid) {
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw invalid_parameter("grid values must be finite and > 0");
        }
    }

    std::vector<RecoveryRecord> records(grid.size());

    auto run_task = [&](std::size_t k) {
        RecoveryRecord rec;
        rec.theta_true = grid[k];
        rec.n = n;
        rec.seed = seed;
        try {
            const ClaytonCopula c(grid[k]);
            RngStream r(seed, k);
            const SampleMatrix m = sample(c, n, r);
            const PseudoObservations p =
                as_pseudo_observations(DataMatrix{m.u1, m.u2});
            const FitResult fit = fit_mle(p);
            rec.theta_hat = fit.theta_hat;
            rec.converged = fit.converged && !fit.at_bracket_edge;
        } catch (const std::exception&) {
            rec.theta_hat = std::numeric_limits<double>::quiet_NaN();
            rec.converged = false;
        }
        records[k] = rec;
    };

    const std::size_t pool = std::min(workers, grid.size());
    if (pool <= 1) {
        for (std::size_t k = 0; k < grid.size(); ++k) run_task(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (std::size_t w = 0; w < pool; ++w) {
            threads.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < records.size();
                     k = next.fetch_add(1)) {
                    run_task(k);
                }
            });
        }
        for (auto& t : threads) t.join();
    }
    return records;
}

std::vector<ScalingRecord> run_scaling_bench(
    const std::vector<std::size_t>& worker_counts,
    const std::vector<double>& grid, std::size_t n, std::uint64_t seed,
    std::size_t reps) {
    if (worker_counts.empty()) throw invalid_parameter("empty worker list");
    if (reps == 0) throw invalid_parameter("reps must be >= 1");
    for (std::size_t w : worker_counts) {
        if (w == 0) throw invalid_parameter("worker counts must be >= 1");
    }

    std::vector<ScalingRecord> out;
    out.reserve(worker_counts.size());
    for (std::size_t w : worker_counts) {
        std::vector<double> timings(reps);
        for (std::size_t rep = 0; rep < reps; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            run_recovery(grid, n, seed, w);
            const auto stop = std::chrono::steady_clock::now();
            timings[rep] =
                std::chrono::duration<double>(stop - start).count();
        }
        std::sort(timings.begin(), timings.end());
        const std::size_t mid = reps / 2;
        const double median = (reps % 2 == 1)
                                  ? timings[mid]
                                  : 0.5 * (timings[mid - 1] + timings[mid]);
        out.push_back({w, median, reps});
    }
    return out;
}

} // namespace clayton
