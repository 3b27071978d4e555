#ifndef CLAYTON_SVG_HPP
#define CLAYTON_SVG_HPP

#include <ostream>
#include <vector>

#include "clayton/studies.hpp"

namespace clayton {

// SVG 1.1 scatter of (theta_true, theta_hat) pairs with a dashed identity
// segment from (0,0) to (max,max), axis labels "True theta" /
// "Estimated theta" and a legend. Element order is deterministic, so the
// output bytes are a pure function of the records.
void write_recovery_svg(std::ostream& os,
                        const std::vector<RecoveryRecord>& records);

// SVG 1.1 line-with-markers plot of wall time against worker count, axis
// labels "Number of workers" / "Execution time (s)".
void write_scaling_svg(std::ostream& os,
                       const std::vector<ScalingRecord>& records);

} // namespace clayton

#endif // CLAYTON_SVG_HPP
