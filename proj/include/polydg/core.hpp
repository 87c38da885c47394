#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace polydg {

/// Working precision: the widest standard binary floating point format on the host.
using Real = long double;

inline constexpr Real kEpsilon = std::numeric_limits<Real>::epsilon();

/// A function value together with an absolute error estimate and the method that produced it.
struct EvalResult {
    Real value = 0;
    Real error = 0;
    std::string method;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Raised when an iterative procedure gives up; carries the best estimate reached so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, Real best_value, Real best_error)
        : std::runtime_error(what), best_value_(best_value), best_error_(best_error) {}

    Real best_value() const noexcept { return best_value_; }
    Real best_error() const noexcept { return best_error_; }

private:
    Real best_value_;
    Real best_error_;
};

}  // namespace polydg
