#include "clayton/rng.hpp"

#include <cmath>
#include <numbers>

namespace clayton {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

constexpr int kGammaIterationCap = 10000;

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_index_(stream_index) {
    std::uint64_t sm = seed;
    std::uint64_t mixed = splitmix64(sm);
    sm = mixed ^ (stream_index * 0xD1B54A32D192ED03ULL + 0x9E3779B97F4A7C15ULL);
    for (auto& word : state_) word = splitmix64(sm);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

std::uint64_t RngStream::next_u64() {
    // xoshiro256++
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::next_uniform() {
    // (k + 0.5) / 2^53 for k in [0, 2^53): strictly inside (0,1).
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::next_exponential() { return -std::log(next_uniform()); }

double RngStream::next_normal() {
    const double r = std::sqrt(-2.0 * std::log(next_uniform()));
    return r * std::cos(2.0 * std::numbers::pi * next_uniform());
}

double RngStream::next_gamma(double shape) {
    if (!std::isfinite(shape) || shape <= 0.0) {
        throw invalid_parameter("gamma shape must be finite and > 0");
    }
    if (shape < 1.0) {
        const double g = next_gamma(shape + 1.0);
        return g * std::pow(next_uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (int iter = 0; iter < kGammaIterationCap; ++iter) {
        double x;
        double v;
        do {
            x = next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
    throw std::runtime_error("gamma rejection sampler hit its iteration cap");
}

} // namespace clayton
