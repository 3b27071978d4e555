#include <doctest.h>

#include <cmath>
#include <vector>

#include "clayton/rng.hpp"
#include "test_support.hpp"

using clayton::RngStream;
namespace ts = test_support;

namespace {

std::vector<double> draw_uniforms(RngStream& r, std::size_t n) {
    std::vector<double> out(n);
    for (auto& x : out) x = r.next_uniform();
    return out;
}

} // namespace

TEST_CASE("identical (seed, index) pairs reproduce the sequence") {
    RngStream a(42, 0);
    RngStream b(42, 0);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct stream indices differ") {
    RngStream a(42, 0);
    RngStream b(42, 1);
    bool any_diff = false;
    for (int i = 0; i < 100; ++i) {
        any_diff |= (a.next_uniform() != b.next_uniform());
    }
    CHECK(any_diff);
}

TEST_CASE("streams are splittable without consuming earlier ones") {
    const double fresh = RngStream(42, 7).next_uniform();
    for (std::uint64_t i = 0; i < 7; ++i) {
        RngStream r(42, i);
        for (int k = 0; k < 50; ++k) r.next_uniform();
    }
    CHECK(RngStream(42, 7).next_uniform() == fresh);
}

TEST_CASE("uniforms: mean, open interval, KS") {
    RngStream r(1, 0);
    const auto xs = draw_uniforms(r, 1000000);
    CHECK(std::abs(ts::mean(xs) - 0.5) < 0.002); // 3 se for Var = 1/12

    double mn = 1.0, mx = 0.0;
    for (double x : xs) {
        mn = std::min(mn, x);
        mx = std::max(mx, x);
    }
    CHECK(mn > 0.0);
    CHECK(mx < 1.0);

    RngStream r2(2, 0);
    CHECK(ts::ks_uniform(draw_uniforms(r2, 100000)) <
          ts::ks_critical_1pct(100000));
}

TEST_CASE("exponential: positivity, mean, tail probability") {
    RngStream r(3, 0);
    const std::size_t n = 1000000;
    double sum = 0.0;
    std::size_t above_one = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = r.next_exponential();
        CHECK(x > 0.0);
        sum += x;
        if (x > 1.0) ++above_one;
    }
    CHECK(std::abs(sum / n - 1.0) < 0.003); // 3 se for Var = 1
    const double p = static_cast<double>(above_one) / n;
    CHECK(std::abs(p - std::exp(-1.0)) < 0.0015); // 3 binomial se
}

TEST_CASE("gamma moments across shapes") {
    const std::size_t n = 1000000;
    for (double shape : {1.0 / 3.0, 0.5, 1.0, 2.0, 10.0}) {
        RngStream r(4, static_cast<std::uint64_t>(shape * 1000));
        std::vector<double> xs(n);
        for (auto& x : xs) x = r.next_gamma(shape);
        const double se_mean = 4.0 * std::sqrt(shape / n);
        CHECK(std::abs(ts::mean(xs) - shape) < se_mean);
        // var of the sample variance for Gamma(k): (2k^2 + 6k)/n, use 4 sd
        const double se_var = 4.0 * std::sqrt((2.0 * shape * shape + 6.0 * shape) / n);
        CHECK(std::abs(ts::variance(xs) - shape) < se_var);
    }
}

TEST_CASE("gamma(1,1) is standard exponential by KS") {
    RngStream r(5, 0);
    std::vector<double> xs(100000);
    for (auto& x : xs) x = r.next_gamma(1.0);
    CHECK(ts::ks_exponential(std::move(xs)) < ts::ks_critical_1pct(100000));
}

TEST_CASE("gamma rejects bad shapes and never livelocks") {
    RngStream r(6, 0);
    CHECK_THROWS_AS(r.next_gamma(0.0), clayton::invalid_parameter);
    CHECK_THROWS_AS(r.next_gamma(-1.0), clayton::invalid_parameter);
    CHECK_THROWS_AS(r.next_gamma(INFINITY), clayton::invalid_parameter);
    // the iteration cap throws if ever hit; these must all return
    for (double shape : {0.01, 0.1, 1.0 / 3.0, 1.0, 10.0, 100.0}) {
        for (int i = 0; i < 20000; ++i) {
            CHECK_NOTHROW((void)r.next_gamma(shape));
        }
    }
}

TEST_CASE("spec example means for gamma") {
    const std::size_t n = 1000000;
    RngStream a(7, 0);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += a.next_gamma(0.5);
    CHECK(std::abs(sum / n - 0.5) < 0.00213);

    RngStream b(7, 1);
    sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += b.next_gamma(10.0);
    CHECK(std::abs(sum / n - 10.0) < 0.00949);
}
