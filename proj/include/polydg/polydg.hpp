#pragma once

#include <string_view>

#include "polydg/core.hpp"
#include "polydg/specfun.hpp"

namespace polydg {

using specfun::Precision;

/// Derivative order n >= 2 and argument x > 0 of the poly-double gamma function.
struct PolyDoubleArg {
    int n = 2;
    Real x = 1;

    void validate() const;
};

enum class Method { Series, PolygammaRelation, Integral, Asymptotic, Auto };

std::string_view to_string(Method m);
/// Parses "series", "polygamma", "integral", "asymptotic" or "auto"; throws DomainError otherwise.
Method parse_method(std::string_view name);

/// Controls for the large-x expansion: N Bernoulli terms and whether the exact
/// integral remainder is evaluated by quadrature.
struct AsymptoticParams {
    int N = 6;
    bool include_remainder = false;

    void validate() const;
};

/// The Laplace density t^n / (1 - e^{-t})^2 of (-1)^{n+1} psi_2^{(n)}.
class Psi2Kernel {
public:
    explicit Psi2Kernel(int n);

    int order() const noexcept { return n_; }
    Real operator()(Real t) const;

private:
    int n_;
};

/// sum_{k>=0} (1 + k) / (x + k)^q for q >= 3: direct head summation with an
/// Euler-Maclaurin tail once x + k passes the shift threshold.
EvalResult weighted_power_sum(int q, Real x, const Precision& prec = {});

/// Canonical definition: (-1)^{n+1} n! sum_{k>=0} (1 + k) / (x + k)^{n+1}.
EvalResult psi2_series(const PolyDoubleArg& arg, const Precision& prec = {});

/// -n psi^{(n-1)}(x) + (1 - x) psi^{(n)}(x).
EvalResult psi2_from_polygamma(const PolyDoubleArg& arg, const Precision& prec = {});

/// (-1)^{n+1} n! (zeta(n, x) + (1 - x) zeta(n + 1, x)).
EvalResult psi2_from_zeta(const PolyDoubleArg& arg, const Precision& prec = {});

/// (-1)^{n+1} * integral_0^inf e^{-xt} t^n / (1 - e^{-t})^2 dt.
EvalResult psi2_integral(const PolyDoubleArg& arg, Real tol);

/// psi_2^{(n)} evaluated at x + 1 from the large-x expansion.
///
/// The closed-form terms come from differentiating the di-double gamma expansion
/// n times. With `include_remainder` the Bernoulli remainder integral is added and
/// the result is exact up to quadrature error; without it the error estimate is
/// the first omitted Bernoulli term. Arguments below 1 are shifted upwards with the
/// recurrence psi_2^{(n)}(z) = psi_2^{(n)}(z + 1) + psi^{(n)}(z).
EvalResult psi2_asymptotic(const PolyDoubleArg& arg, const AsymptoticParams& params, const Precision& prec = {});

/// The closed-form (non-Bernoulli) part of the expansion at x: everything except sigma and tau.
EvalResult asymptotic_closed_terms(int n, Real x, const Precision& prec = {});

/// sigma_n(x) as obtained by differentiation, summed over k = 1..N-1.
Real asymptotic_sigma(int n, Real x, int N);

/// tau_n(x) as obtained by differentiation:
/// (-1)^n * integral_0^inf t^{n-2} e^{-xt} (t / (e^t - 1) - sum_{k=0}^{2N} B_k t^k / k!) dt.
EvalResult asymptotic_tau(int n, Real x, int N, Real tol);

/// t / (e^t - 1) - sum_{k=0}^{2N} B_k t^k / k!, accurate near t = 0.
Real bernoulli_remainder(Real t, int N);

/// Dispatching evaluator; Auto uses the series for x <= shift_threshold or n >= 8 and
/// the truncated expansion (N = 6) one recurrence step below x otherwise.
EvalResult psi2_eval(const PolyDoubleArg& arg, Method method = Method::Auto, const Precision& prec = {});

/// Shorthand for psi2_eval(PolyDoubleArg{n, x}, Method::Auto, prec).
EvalResult psi2(int n, Real x, const Precision& prec = {});

/// The di-double gamma function
/// -log(2 pi)/2 + (1 + gamma) x + 1/2 - sum_{k>=0} (x - 1)^2 / ((k + 1)(x + k)).
EvalResult psi2_didouble(Real x, const Precision& prec = {});

/// log G(x) from the Weierstrass product at z = x - 1.
EvalResult log_barnes_g(Real x, const Precision& prec = {});

}  // namespace polydg
