#include "clayton/copula.hpp"

#include <cmath>
#include <limits>

namespace clayton {

namespace {

constexpr double kLogDblMax = 709.782712893383996; // log(DBL_MAX)

void require_interior(UnitPoint p) {
    if (!(p.u > 0.0 && p.u < 1.0 && p.v > 0.0 && p.v < 1.0)) {
        throw domain_error("density undefined outside the open unit square");
    }
}

} // namespace

ClaytonCopula::ClaytonCopula(double theta) : theta_(theta) {
    if (!std::isfinite(theta) || theta <= 0.0) {
        throw invalid_parameter("Clayton parameter theta must be finite and > 0");
    }
}

double ClaytonCopula::cdf(UnitPoint p) const {
    if (!(p.u >= 0.0 && p.u <= 1.0 && p.v >= 0.0 && p.v <= 1.0)) {
        throw domain_error("cdf requires a point in the closed unit square");
    }
    if (p.u == 0.0 || p.v == 0.0) return 0.0;
    if (p.u == 1.0) return p.v;
    if (p.v == 1.0) return p.u;
    // u^{-theta} + v^{-theta} - 1 = 1 + s with
    // s = expm1(-theta log u) + expm1(-theta log v), stable for small theta.
    const double a = -theta_ * std::log(p.u);
    const double b = -theta_ * std::log(p.v);
    const double hi = a >= b ? a : b;
    const double lo = a >= b ? b : a;
    double log_core;
    if (hi < 1.0) {
        log_core = std::log1p(std::expm1(a) + std::expm1(b));
    } else {
        log_core = hi + std::log1p(std::exp(lo - hi) - std::exp(-hi));
    }
    return std::exp(-log_core / theta_);
}

double ClaytonCopula::log_pdf(UnitPoint p) const {
    require_interior(p);
    const double lu = std::log(p.u);
    const double lv = std::log(p.v);
    const double a = -theta_ * lu;
    const double b = -theta_ * lv;
    if (a > kLogDblMax || b > kLogDblMax) {
        throw overflow_signal("u^{-theta} exceeds the representable range");
    }
    // log(e^a + e^b - 1) via the larger exponent; exact also for tiny theta.
    const double hi = a >= b ? a : b;
    const double lo = a >= b ? b : a;
    double log_core;
    if (hi < 1.0) {
        // both terms near 1: e^a + e^b - 1 = 1 + expm1(a) + expm1(b)
        log_core = std::log1p(std::expm1(a) + std::expm1(b));
    } else {
        log_core = hi + std::log1p(std::exp(lo - hi) - std::exp(-hi));
    }
    return std::log1p(theta_) - (theta_ + 1.0) * (lu + lv) -
           (2.0 + 1.0 / theta_) * log_core;
}

double ClaytonCopula::pdf(UnitPoint p) const { return std::exp(log_pdf(p)); }

double ClaytonCopula::generator(double t) const {
    if (!std::isfinite(t) || t < 0.0) {
        throw domain_error("generator requires finite t >= 0");
    }
    return std::exp(-std::log1p(t) / theta_);
}

} // namespace clayton
