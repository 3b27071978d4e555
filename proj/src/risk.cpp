#include "clayton/risk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace clayton {

namespace {

void require_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw domain_error("confidence level must lie in (0,1)");
    }
}

void sort_if_needed(AggregateSample& a) {
    if (!a.sorted) {
        std::sort(a.values.begin(), a.values.end());
        a.sorted = true;
    }
}

} // namespace

double empirical_quantile(const std::vector<double>& col, double p) {
    require_alpha(p);
    if (col.empty()) throw invalid_input("empty column");
    const auto n = col.size();
    auto k = static_cast<std::size_t>(
        std::ceil(p * static_cast<double>(n)));
    if (k < 1) k = 1;
    if (k > n) k = n;
    return col[k - 1];
}

AggregateSample aggregate(const SampleMatrix& v, const DataMatrix& x) {
    if (x.rows() == 0) throw invalid_input("empty data matrix");
    std::vector<double> col1 = x.x1;
    std::vector<double> col2 = x.x2;
    std::sort(col1.begin(), col1.end());
    std::sort(col2.begin(), col2.end());

    AggregateSample a;
    a.values.resize(v.rows());
    for (std::size_t i = 0; i < v.rows(); ++i) {
        a.values[i] = 0.5 * (empirical_quantile(col1, v.u1[i]) +
                             empirical_quantile(col2, v.u2[i]));
    }
    return a;
}

double value_at_risk(AggregateSample& a, double alpha) {
    require_alpha(alpha);
    if (a.values.empty()) throw invalid_input("empty aggregate sample");
    sort_if_needed(a);
    return empirical_quantile(a.values, alpha);
}

ShortfallResult expected_shortfall(AggregateSample& a, double alpha) {
    const double var = value_at_risk(a, alpha);
    // a is sorted now; the strict tail is a suffix
    auto first = std::upper_bound(a.values.begin(), a.values.end(), var);
    const auto count = static_cast<std::size_t>(a.values.end() - first);
    if (count == 0) {
        throw empty_tail("no aggregate value strictly exceeds VaR");
    }
    double sum = 0.0;
    for (auto it = first; it != a.values.end(); ++it) sum += *it;
    return {sum / static_cast<double>(count), count};
}

RiskReport run_risk_pipeline(const DataMatrix& x, double alpha,
                             std::size_t big_n, std::uint64_t seed,
                             std::size_t workers) {
    require_alpha(alpha);
    if (big_n == 0) throw invalid_parameter("simulation size must be >= 1");

    RiskReport report;
    report.alpha = alpha;
    report.big_n = big_n;

    FitResult fit;
    try {
        fit = fit_mle(pseudo_observations(x));
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("fit stage: ") + e.what());
    }
    report.theta_hat = fit.theta_hat;

    AggregateSample agg;
    try {
        const ClaytonCopula c(fit.theta_hat);
        const SampleMatrix sim = sample_parallel(c, big_n, seed, workers);
        agg = aggregate(sim, x);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("simulation stage: ") + e.what());
    }

    try {
        report.var = value_at_risk(agg, alpha);
        const ShortfallResult sf = expected_shortfall(agg, alpha);
        report.es = sf.es;
        report.exceedances = sf.exceedances;
    } catch (const empty_tail& e) {
        throw empty_tail(std::string("tail stage: ") + e.what());
    }
    return report;
}

} // namespace clayton
