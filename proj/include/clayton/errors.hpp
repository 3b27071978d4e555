#ifndef CLAYTON_ERRORS_HPP
#define CLAYTON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clayton {

// Bad argument values (theta <= 0, zero sample sizes, malformed options).
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Evaluation requested outside a function's mathematical domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed input data (too few rows, non-finite entries, bad CSV).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// u^{-theta} or v^{-theta} left the representable double range.
class overflow_signal : public std::range_error {
public:
    using std::range_error::range_error;
};

// The objective was non-finite at every probed point.
class non_finite_objective : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No aggregate value strictly exceeds VaR.
class empty_tail : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace clayton

#endif // CLAYTON_ERRORS_HPP
