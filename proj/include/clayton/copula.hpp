#ifndef CLAYTON_COPULA_HPP
#define CLAYTON_COPULA_HPP

#include "clayton/errors.hpp"

namespace clayton {

// A point in the closed unit square. Density evaluation additionally
// requires both coordinates strictly inside (0,1).
struct UnitPoint {
    double u;
    double v;
};

// Bivariate Clayton copula with dependence parameter theta > 0.
//
//   C(u,v) = (u^{-theta} + v^{-theta} - 1)^{-1/theta}
//
// Immutable after construction; all member functions are pure and safe
// to call concurrently.
class ClaytonCopula {
public:
    // Throws invalid_parameter unless theta is finite and > 0.
    explicit ClaytonCopula(double theta);

    double theta() const { return theta_; }

    // CDF on the closed unit square, with the exact boundary conventions
    // C(u,0)=C(0,v)=0, C(u,1)=u, C(1,v)=v.
    double cdf(UnitPoint p) const;

    // Density on the open unit square; throws domain_error at the boundary.
    // Defined as exp(log_pdf).
    double pdf(UnitPoint p) const;

    // Log-density, computed entirely in the log domain:
    //   log(1+theta) - (theta+1)(log u + log v)
    //     - (2 + 1/theta) log(u^{-theta} + v^{-theta} - 1)
    // Throws domain_error at the boundary, overflow_signal when u^{-theta}
    // or v^{-theta} exceeds the double range.
    double log_pdf(UnitPoint p) const;

    // Archimedean generator psi(t) = (1+t)^{-1/theta}, t >= 0.
    double generator(double t) const;

private:
    double theta_;
};

} // namespace clayton

#endif // CLAYTON_COPULA_HPP
