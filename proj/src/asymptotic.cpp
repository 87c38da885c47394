#include <cmath>

#include "polydg/polydg.hpp"
#include "polydg/quadrature.hpp"

namespace polydg {

namespace {

using specfun::factorial;

// The remainder series and the first omitted sigma term reach past the default table.
const specfun::BernoulliTable& wide_table() {
    static const specfun::BernoulliTable table(160);
    return table;
}

Real parity(int n) { return n % 2 == 0 ? 1 : -1; }  // (-1)^n

Real sigma_term(int n, Real x, int k) {
    const auto& bern = wide_table();
    return parity(n) * bern[2 * k + 2] * factorial(2 * k + n) / factorial(2 * k + 2) /
           std::pow(x, static_cast<Real>(2 * k + n + 1));
}

}  // namespace

EvalResult asymptotic_closed_terms(int n, Real x, const Precision& prec) {
    PolyDoubleArg{n, x}.validate();
    const EvalResult pn = specfun::polygamma(n, x + 1, prec);
    const EvalResult pm = specfun::polygamma(n - 1, x + 1, prec);
    const Real s = parity(n);
    const Real terms[] = {
        -x * pn.value,
        -(n + 1) * pm.value,
        s * factorial(n - 2) / std::pow(x, static_cast<Real>(n - 1)),
        -s * factorial(n - 1) / (2 * std::pow(x, static_cast<Real>(n))),
        s * factorial(n) / (12 * std::pow(x, static_cast<Real>(n + 1))),
    };
    Real value = 0;
    Real mass = 0;
    for (Real t : terms) {
        value += t;
        mass += std::fabs(t);
    }
    const Real error = x * pn.error + (n + 1) * pm.error + 4 * kEpsilon * mass;
    return {value, error, "closed-form"};
}

Real asymptotic_sigma(int n, Real x, int N) {
    Real sum = 0;
    for (int k = N - 1; k >= 1; --k) sum += sigma_term(n, x, k);
    return sum;
}

Real bernoulli_remainder(Real t, int N) {
    const auto& bern = wide_table();
    if (std::fabs(t) < 3) {
        // Tail of the generating function: sum_{k >= 2N+2, even} B_k t^k / k!
        Real sum = 0;
        Real power = std::pow(t, static_cast<Real>(2 * N + 2)) / factorial(2 * N + 2);
        for (int k = 2 * N + 2; k <= bern.capacity(); k += 2) {
            const Real term = bern[k] * power;
            sum += term;
            if (std::fabs(term) <= kEpsilon * std::fabs(sum) / 8) break;
            power *= t * t / (static_cast<Real>(k + 1) * static_cast<Real>(k + 2));
        }
        return sum;
    }
    Real poly = 0;
    Real power = 1;
    for (int k = 0; k <= 2 * N; ++k) {
        poly += bern[k] * power;
        power *= t / (k + 1);
    }
    return t / std::expm1(t) - poly;
}

EvalResult asymptotic_tau(int n, Real x, int N, Real tol) {
    PolyDoubleArg{n, x}.validate();
    AsymptoticParams{N, true}.validate();
    const auto& bern = wide_table();
    Real envelope = 1;
    for (int k = 0; k <= 2 * N; ++k) envelope += std::fabs(bern[k]) / factorial(k);

    quadrature::IntegrandSpec spec;
    spec.evaluate = [n, x, N](Real t) {
        return std::pow(t, static_cast<Real>(n - 2)) * std::exp(-x * t) * bernoulli_remainder(t, N);
    };
    spec.decay_rate = x;
    spec.origin_order = n + 2 * N;
    spec.growth_order = n - 2 + 2 * N;
    spec.envelope = envelope;
    const auto q = quadrature::integrate_semi_infinite(spec, tol);
    return {parity(n) * q.value, q.error_estimate, "quadrature"};
}

EvalResult psi2_asymptotic(const PolyDoubleArg& arg, const AsymptoticParams& params, const Precision& prec) {
    arg.validate();
    params.validate();
    prec.validate();

    // psi_2^{(n)}(x+1) = psi_2^{(n)}(x+m+1) + sum_{i=1}^{m} psi^{(n)}(x+i)
    Real y = arg.x;
    Real shift_value = 0;
    Real shift_error = 0;
    while (y < 1) {
        y += 1;
        const EvalResult p = specfun::polygamma(arg.n, y, prec);
        shift_value += p.value;
        shift_error += p.error;
    }

    const EvalResult closed = asymptotic_closed_terms(arg.n, y, prec);
    const Real sigma = asymptotic_sigma(arg.n, y, params.N);
    Real value = closed.value + sigma + shift_value;
    Real error = closed.error + shift_error + 4 * kEpsilon * std::fabs(sigma);
    if (params.include_remainder) {
        const EvalResult tau = asymptotic_tau(arg.n, y, params.N, prec.abs_tol / 10);
        value += tau.value;
        error += tau.error;
    } else {
        error += std::fabs(sigma_term(arg.n, y, params.N));
    }
    return {value, error, params.include_remainder ? "asymptotic+remainder" : "asymptotic"};
}

}  // namespace polydg
