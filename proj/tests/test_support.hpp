#ifndef CLAYTON_TEST_SUPPORT_HPP
#define CLAYTON_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace test_support {

// Two-sided Kolmogorov-Smirnov statistic against the standard uniform.
inline double ks_uniform(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double hi = (static_cast<double>(i) + 1.0) / n - samples[i];
        const double lo = samples[i] - static_cast<double>(i) / n;
        d = std::max(d, std::max(hi, lo));
    }
    return d;
}

// KS statistic against the standard exponential CDF 1 - e^{-x}.
inline double ks_exponential(std::vector<double> samples) {
    for (auto& x : samples) x = -std::expm1(-x);
    return ks_uniform(std::move(samples));
}

inline double mean(const std::vector<double>& xs) {
    return std::accumulate(xs.begin(), xs.end(), 0.0) /
           static_cast<double>(xs.size());
}

inline double variance(const std::vector<double>& xs) {
    const double m = mean(xs);
    double acc = 0.0;
    for (double x : xs) acc += (x - m) * (x - m);
    return acc / (static_cast<double>(xs.size()) - 1.0);
}

inline double pearson(const std::vector<double>& xs,
                      const std::vector<double>& ys) {
    const double mx = mean(xs);
    const double my = mean(ys);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

// 99% critical value for the one-sample KS test.
inline double ks_critical_1pct(std::size_t n) {
    return 1.63 / std::sqrt(static_cast<double>(n));
}

// Closed-form Clayton CDF in extended precision. The mixed finite
// difference below cancels ~10 significant digits at step h = 1e-5, so a
// double-precision CDF would drown the signal in rounding noise; the
// 64-bit long double mantissa keeps the quotient accurate to ~1e-6.
inline long double clayton_cdf_xp(long double u, long double v,
                                  long double theta) {
    return std::pow(std::pow(u, -theta) + std::pow(v, -theta) - 1.0L,
                    -1.0L / theta);
}

// Mixed central finite difference d2C/(du dv) of the closed-form CDF.
inline double clayton_pdf_fd_oracle(double u, double v, double theta,
                                    double h = 1e-5) {
    const long double ul = u, vl = v, tl = theta, hl = h;
    const long double fd =
        (clayton_cdf_xp(ul + hl, vl + hl, tl) -
         clayton_cdf_xp(ul - hl, vl + hl, tl) -
         clayton_cdf_xp(ul + hl, vl - hl, tl) +
         clayton_cdf_xp(ul - hl, vl - hl, tl)) /
        (4.0L * hl * hl);
    return static_cast<double>(fd);
}

} // namespace test_support

#endif // CLAYTON_TEST_SUPPORT_HPP
