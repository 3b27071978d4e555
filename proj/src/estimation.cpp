#include "clayton/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "clayton/copula.hpp"

namespace clayton {

namespace {

std::vector<double> rank_column(const std::vector<double>& col) {
    const std::size_t n = col.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return col[a] < col[b]; });

    std::vector<double> out(n);
    const double denom = static_cast<double>(n) + 1.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && col[order[j + 1]] == col[order[i]]) ++j;
        // midrank over the tie group [i, j], ranks 1-based
        const double midrank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) out[order[k]] = midrank / denom;
        i = j + 1;
    }
    return out;
}

void check_shape(const DataMatrix& x) {
    if (x.x1.size() != x.x2.size()) {
        throw invalid_input("data columns have unequal lengths");
    }
    if (x.rows() < 2) throw invalid_input("at least 2 rows are required");
}

// Objective wrapper for the search: non-finite values and overflow of
// u^{-theta} become -inf so golden-section comparisons simply reject them.
double safe_objective(double theta, const PseudoObservations& p) {
    try {
        const double ll = log_likelihood(theta, p);
        return std::isfinite(ll) ? ll : -std::numeric_limits<double>::infinity();
    } catch (const overflow_signal&) {
        return -std::numeric_limits<double>::infinity();
    }
}

} // namespace

PseudoObservations pseudo_observations(const DataMatrix& x) {
    check_shape(x);
    for (std::size_t i = 0; i < x.rows(); ++i) {
        if (!std::isfinite(x.x1[i]) || !std::isfinite(x.x2[i])) {
            throw invalid_input("data contains non-finite entries");
        }
    }
    return PseudoObservations{rank_column(x.x1), rank_column(x.x2)};
}

PseudoObservations as_pseudo_observations(const DataMatrix& x) {
    check_shape(x);
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const bool ok = x.x1[i] > 0.0 && x.x1[i] < 1.0 && x.x2[i] > 0.0 && x.x2[i] < 1.0;
        if (!ok) throw invalid_input("pseudo data must lie strictly inside (0,1)");
    }
    return PseudoObservations{x.x1, x.x2};
}

double log_likelihood(double theta, const PseudoObservations& p) {
    if (!std::isfinite(theta) || theta <= 0.0) {
        throw invalid_parameter("theta must be finite and > 0");
    }
    const ClaytonCopula c(theta);
    double sum = 0.0;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        sum += c.log_pdf({p.u1[i], p.u2[i]});
    }
    return sum;
}

FitResult fit_mle(const PseudoObservations& p, const FitOptions& opts) {
    if (p.rows() < 2) throw invalid_input("at least 2 rows are required");
    if (!(opts.bracket_lo > 0.0 && opts.bracket_lo < opts.bracket_hi)) {
        throw invalid_parameter("fit bracket must satisfy 0 < lo < hi");
    }
    if (!(opts.tol > 0.0)) throw invalid_parameter("fit tolerance must be > 0");

    const double t_min = std::log(opts.bracket_lo);
    const double t_max = std::log(opts.bracket_hi);

    FitResult res;
    res.bracket_lo = opts.bracket_lo;
    res.bracket_hi = opts.bracket_hi;

    auto eval = [&](double t) {
        ++res.evaluations;
        return safe_objective(std::exp(t), p);
    };

    constexpr double kInvPhi = 0.6180339887498949; // 1/golden ratio
    double a = t_min;
    double b = t_max;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    double best = std::max(fc, fd);

    while (b - a > opts.tol && res.evaluations < opts.max_evaluations) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = eval(d);
        }
        best = std::max({best, fc, fd});
    }

    if (!std::isfinite(best)) {
        throw non_finite_objective("log-likelihood non-finite at every probed theta");
    }

    const double t_hat = 0.5 * (a + b);
    res.converged = (b - a) <= opts.tol;
    res.at_bracket_edge =
        t_hat - t_min <= 3.0 * opts.tol || t_max - t_hat <= 3.0 * opts.tol;
    res.theta_hat = std::exp(t_hat);
    res.log_likelihood = log_likelihood(res.theta_hat, p);
    return res;
}

} // namespace clayton
