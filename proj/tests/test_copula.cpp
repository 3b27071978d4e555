#include <doctest.h>

#include <cmath>

#include "clayton/copula.hpp"
#include "clayton/rng.hpp"
#include "test_support.hpp"

using clayton::ClaytonCopula;
using clayton::UnitPoint;

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(ClaytonCopula(2.0));
    CHECK_THROWS_AS(ClaytonCopula(0.0), clayton::invalid_parameter);
    CHECK_THROWS_AS(ClaytonCopula(-0.5), clayton::invalid_parameter);
    CHECK_THROWS_AS(ClaytonCopula(std::nan("")), clayton::invalid_parameter);
    CHECK_THROWS_AS(ClaytonCopula{INFINITY}, clayton::invalid_parameter);
}

TEST_CASE("cdf point values") {
    // theta=2 at (0.5, 0.5): (4 + 4 - 1)^{-1/2} = 7^{-1/2}
    CHECK(ClaytonCopula(2.0).cdf({0.5, 0.5}) ==
          doctest::Approx(1.0 / std::sqrt(7.0)).epsilon(1e-14));
    CHECK(ClaytonCopula(1.7).cdf({0.42, 1.0}) == 0.42);
    CHECK(ClaytonCopula(3.0).cdf({0.0, 0.6}) == 0.0);
}

TEST_CASE("cdf boundary contract over a theta grid") {
    for (double theta : {0.25, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const ClaytonCopula c(theta);
        for (double u = 0.05; u < 1.0; u += 0.05) {
            CHECK(c.cdf({u, 1.0}) == doctest::Approx(u).epsilon(1e-15));
            CHECK(c.cdf({1.0, u}) == doctest::Approx(u).epsilon(1e-15));
            CHECK(c.cdf({u, 0.0}) == 0.0);
            CHECK(c.cdf({0.0, u}) == 0.0);
        }
    }
}

TEST_CASE("cdf is 2-increasing on random rectangles") {
    clayton::RngStream r(99, 0);
    for (double theta : {0.25, 1.0, 2.0, 10.0}) {
        const ClaytonCopula c(theta);
        for (int rep = 0; rep < 200; ++rep) {
            double u1 = r.next_uniform(), u2 = r.next_uniform();
            double v1 = r.next_uniform(), v2 = r.next_uniform();
            if (u1 > u2) std::swap(u1, u2);
            if (v1 > v2) std::swap(v1, v2);
            const double mass = c.cdf({u2, v2}) - c.cdf({u1, v2}) -
                                c.cdf({u2, v1}) + c.cdf({u1, v1});
            CHECK(mass >= -1e-12);
        }
    }
}

TEST_CASE("pdf point values") {
    // theta=2 at (0.5, 0.5): 3 * 64 * 7^{-5/2}
    CHECK(ClaytonCopula(2.0).pdf({0.5, 0.5}) ==
          doctest::Approx(3.0 * 64.0 * std::pow(7.0, -2.5)).epsilon(1e-13));
    // theta=1 at (0.5, 0.5): 2 * 16 * 3^{-3} = 32/27
    CHECK(ClaytonCopula(1.0).pdf({0.5, 0.5}) ==
          doctest::Approx(32.0 / 27.0).epsilon(1e-13));
    // independence limit
    CHECK(ClaytonCopula(1e-8).pdf({0.3, 0.7}) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("pdf rejects the boundary") {
    const ClaytonCopula c(2.0);
    CHECK_THROWS_AS(c.pdf({0.0, 0.5}), clayton::domain_error);
    CHECK_THROWS_AS(c.pdf({0.5, 1.0}), clayton::domain_error);
    CHECK_THROWS_AS(c.log_pdf({1.0, 0.5}), clayton::domain_error);
}

TEST_CASE("log_pdf point values and overflow") {
    const ClaytonCopula c(2.0);
    CHECK(c.log_pdf({0.5, 0.5}) ==
          doctest::Approx(std::log(3.0 * 64.0 * std::pow(7.0, -2.5)))
              .epsilon(1e-12));
    CHECK(std::abs(ClaytonCopula(1e-8).log_pdf({0.3, 0.7})) < 1e-5);
    // u^{-theta} = 10^{600} is past the double range
    CHECK_THROWS_AS(c.log_pdf({1e-300, 0.5}), clayton::overflow_signal);
}

TEST_CASE("log_pdf agrees with log(pdf) on an interior grid") {
    for (double theta : {0.25, 1.0, 2.0, 5.0}) {
        const ClaytonCopula c(theta);
        for (double u = 0.05; u < 1.0; u += 0.09) {
            for (double v = 0.05; v < 1.0; v += 0.09) {
                const double p = c.pdf({u, v});
                if (p > 0.0 && std::isfinite(p)) {
                    CHECK(std::abs(c.log_pdf({u, v}) - std::log(p)) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("pdf matches mixed finite difference of the cdf") {
    for (double theta : {0.5, 1.0, 2.0, 5.0}) {
        const ClaytonCopula c(theta);
        for (double u = 0.05; u <= 0.951; u += 0.09) {
            for (double v = 0.05; v <= 0.951; v += 0.09) {
                const double fd = test_support::clayton_pdf_fd_oracle(u, v, theta);
                const double p = c.pdf({u, v});
                CHECK(std::abs(fd - p) / p < 1e-4);
            }
        }
    }
}

TEST_CASE("cdf agrees with the extended-precision closed form") {
    for (double theta : {0.25, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const ClaytonCopula c(theta);
        for (double u = 0.05; u <= 0.951; u += 0.09) {
            for (double v = 0.05; v <= 0.951; v += 0.09) {
                const double exact = static_cast<double>(
                    test_support::clayton_cdf_xp(u, v, theta));
                CHECK(c.cdf({u, v}) == doctest::Approx(exact).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("pdf on the diagonal is finite across theta") {
    for (double theta = 0.1; theta <= 10.0; theta += 0.1) {
        const double p = ClaytonCopula(theta).pdf({0.37, 0.37});
        CHECK(std::isfinite(p));
        CHECK(p > 0.0);
    }
}

TEST_CASE("generator values and monotonicity") {
    CHECK(ClaytonCopula(2.0).generator(3.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ClaytonCopula(5.0).generator(0.0) == 1.0);
    CHECK(ClaytonCopula(1.0).generator(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    const ClaytonCopula c(1.5);
    double prev = c.generator(0.0);
    for (double t = 0.5; t < 50.0; t += 0.5) {
        const double g = c.generator(t);
        CHECK(g < prev);
        prev = g;
    }
    CHECK_THROWS_AS(c.generator(-1.0), clayton::domain_error);
    CHECK_THROWS_AS(c.generator(INFINITY), clayton::domain_error);
}
