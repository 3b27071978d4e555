#ifndef CLAYTON_STUDIES_HPP
#define CLAYTON_STUDIES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "clayton/errors.hpp"

namespace clayton {

struct RecoveryRecord {
    double theta_true = 0.0;
    double theta_hat = 0.0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    bool converged = false;
};

struct ScalingRecord {
    std::size_t workers = 0;
    double wall_time_seconds = 0.0;
    std::size_t repetitions = 0;
};

// k equally spaced values with both endpoints included exactly.
std::vector<double> linear_grid(double lo, double hi, std::size_t k);

// Parameter recovery study: for grid index k, draws an n-row sample from
// RngStream(seed, k), fits theta by pseudo-ML on the raw copula sample,
// and records the pair. Grid tasks run on a pool of `workers` threads but
// the records are a pure function of (grid, n, seed); failed fits yield
// converged=false (theta_hat is NaN) instead of aborting the study.
std::vector<RecoveryRecord> run_recovery(const std::vector<double>& grid,
                                         std::size_t n, std::uint64_t seed,
                                         std::size_t workers);

// Wall-time benchmark: for each worker count runs run_recovery reps times
// and records the median wall time. Numerical outputs are identical across
// worker counts; only the timings differ.
std::vector<ScalingRecord> run_scaling_bench(
    const std::vector<std::size_t>& worker_counts,
    const std::vector<double>& grid, std::size_t n, std::uint64_t seed,
    std::size_t reps);

} // namespace clayton

#endif // CLAYTON_STUDIES_HPP
