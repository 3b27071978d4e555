#ifndef CLAYTON_ESTIMATION_HPP
#define CLAYTON_ESTIMATION_HPP

#include <cstddef>
#include <vector>

#include "clayton/errors.hpp"

namespace clayton {

// n x 2 matrix of raw real-valued measurements; all entries finite.
struct DataMatrix {
    std::vector<double> x1;
    std::vector<double> x2;

    std::size_t rows() const { return x1.size(); }
};

// Rank-transformed data: each column, sorted, is {1/(n+1), ..., n/(n+1)}
// when the raw column has no ties; ties get midranks.
struct PseudoObservations {
    std::vector<double> u1;
    std::vector<double> u2;

    std::size_t rows() const { return u1.size(); }
};

struct FitOptions {
    double bracket_lo = 1e-3;
    double bracket_hi = 50.0;
    double tol = 1e-6; // absolute tolerance on log(theta)
    std::size_t max_evaluations = 500;
};

struct FitResult {
    double theta_hat = 0.0;
    double log_likelihood = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
    // Maximizer sits within tolerance of a bracket endpoint; the reported
    // theta_hat is then an edge value, not an interior stationary point.
    bool at_bracket_edge = false;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

// u_ij = rank(x_ij within column j) / (n+1), ranks ascending, 1-based,
// midranks for ties. Throws invalid_input for n < 2 or non-finite entries.
PseudoObservations pseudo_observations(const DataMatrix& x);

// Wraps data already in (0,1) without rank-transforming it (the path used
// when fitting directly on copula samples). Throws invalid_input unless
// every entry lies strictly inside (0,1) and n >= 2.
PseudoObservations as_pseudo_observations(const DataMatrix& x);

// Sum over rows of the Clayton log-density at theta. Sequential summation
// order, so the result is a pure function of (theta, p). Throws
// invalid_parameter for theta <= 0.
double log_likelihood(double theta, const PseudoObservations& p);

// Maximizes log_likelihood over theta inside [opts.bracket_lo,
// opts.bracket_hi] by golden-section search on t = log(theta) to absolute
// tolerance opts.tol in t.
//
// A maximizer within tolerance of a bracket endpoint is reported through
// FitResult::at_bracket_edge rather than hidden. Throws
// non_finite_objective when the likelihood is non-finite everywhere probed.
FitResult fit_mle(const PseudoObservations& p, const FitOptions& opts = {});

} // namespace clayton

#endif // CLAYTON_ESTIMATION_HPP
