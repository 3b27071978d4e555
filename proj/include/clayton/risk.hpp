#ifndef CLAYTON_RISK_HPP
#define CLAYTON_RISK_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "clayton/estimation.hpp"
#include "clayton/sampling.hpp"

namespace clayton {

// Aggregate portfolio values; sorted flags nondecreasing order.
struct AggregateSample {
    std::vector<double> values;
    bool sorted = false;
};

struct RiskReport {
    double alpha = 0.0;
    std::size_t big_n = 0;
    double theta_hat = 0.0;
    double var = 0.0;
    double es = 0.0;
    std::size_t exceedances = 0;
};

// Inverse of the scaled empirical CDF: col[ceil(p*n)] with a 1-based
// index. col must be sorted ascending and nonempty. Throws domain_error
// for p outside (0,1).
double empirical_quantile(const std::vector<double>& col, double p);

// x_bar_i = (F1^{-1}(v_i1) + F2^{-1}(v_i2)) / 2 with empirical_quantile on
// each raw data column.
AggregateSample aggregate(const SampleMatrix& v, const DataMatrix& x);

// The ceil(alpha*N)-th order statistic (1-based); sorts a if needed.
double value_at_risk(AggregateSample& a, double alpha);

struct ShortfallResult {
    double es = 0.0;
    std::size_t exceedances = 0;
};

// Mean of the values strictly exceeding VaR_alpha. Throws empty_tail when
// nothing exceeds it (e.g. the maximum is attained with multiplicity).
ShortfallResult expected_shortfall(AggregateSample& a, double alpha);

// Full Monte Carlo pipeline: pseudo-observations + fit, simulate big_n
// rows from the fitted copula, invert empirical margins and aggregate,
// then VaR and ES. Deterministic given (x, alpha, big_n, seed); workers
// only changes wall time. Errors are re-thrown with a stage label.
RiskReport run_risk_pipeline(const DataMatrix& x, double alpha,
                             std::size_t big_n, std::uint64_t seed,
                             std::size_t workers);

} // namespace clayton

#endif // CLAYTON_RISK_HPP
