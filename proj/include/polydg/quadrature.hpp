#pragma once

#include <cstddef>
#include <functional>

#include "polydg/core.hpp"

namespace polydg::quadrature {

/// An integrand plus the analytic facts the integrators rely on.
///
/// `evaluate` must be pure: it may be called concurrently and in any order.
/// For semi-infinite integration the integrand must obey the envelope
/// |f(t)| <= envelope * t^growth_order * exp(-decay_rate * t) for t >= 1.
struct IntegrandSpec {
    std::function<Real(Real)> evaluate;
    Real decay_rate = 0;
    Real origin_order = 0;  ///< leading power of t as t -> 0+; must exceed -1
    Real growth_order = 0;
    Real envelope = 1;
};

struct QuadratureResult {
    Real value = 0;
    Real error_estimate = 0;
    std::size_t evaluations = 0;
};

struct Options {
    std::size_t max_subdivisions = 2000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over [a, b].
///
/// When a == 0 and f.origin_order lies in (-1, 0) the substitution t = u^2 removes
/// the endpoint singularity. Throws ConvergenceError (carrying the best estimate)
/// if the error target is not met within the subdivision budget.
QuadratureResult integrate_finite(const IntegrandSpec& f, Real a, Real b, Real tol, const Options& opts = {});

/// Integral of f over [0, inf): adaptive on [0, T] plus an analytic tail bound on [T, inf)
/// from the envelope, with T chosen so the tail bound is at most tol / 2.
QuadratureResult integrate_semi_infinite(const IntegrandSpec& f, Real tol, const Options& opts = {});

/// Upper bound for the integral of envelope * t^p * exp(-r t) over [T, inf); requires r T > p.
Real exponential_tail_bound(Real envelope, Real p, Real r, Real T);

}  // namespace polydg::quadrature
