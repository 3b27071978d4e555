#ifndef CLAYTON_SAMPLING_HPP
#define CLAYTON_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "clayton/copula.hpp"
#include "clayton/rng.hpp"

namespace clayton {

// n x 2 matrix of copula observations, every entry strictly inside (0,1).
// Row i is one joint observation (u_i1, u_i2). clamped counts entries that
// underflowed psi and were clamped to the smallest positive normal double.
struct SampleMatrix {
    std::vector<double> u1;
    std::vector<double> u2;
    std::size_t clamped = 0;

    std::size_t rows() const { return u1.size(); }
};

// Rows are generated in fixed chunks of this size; chunk k always comes
// from stream(seed, k). This is a format contract, not a tuning knob.
inline constexpr std::size_t kSampleChunkRows = 4096;

// Marshall-Olkin sampling: per row draws E1, E2 ~ Exp(1) and
// V ~ Gamma(1/theta, 1) from r, in exactly that order, and returns
// (psi(E1/V), psi(E2/V)). Throws invalid_parameter for n = 0.
SampleMatrix sample(const ClaytonCopula& c, std::size_t n, RngStream& r);

// Deterministically parallel sampling: output is bit-identical to the
// canonical chunked schedule (chunk k of kSampleChunkRows rows drawn from
// RngStream(seed, k)) for any worker count. Throws invalid_parameter for
// zero n or workers.
SampleMatrix sample_parallel(const ClaytonCopula& c, std::size_t n,
                             std::uint64_t seed, std::size_t workers);

} // namespace clayton

#endif // CLAYTON_SAMPLING_HPP
