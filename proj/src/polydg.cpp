#include "polydg/polydg.hpp"

#include <cmath>
#include <string>

#include "polydg/quadrature.hpp"

namespace polydg {

namespace {

Real sign_for(int n) { return (n + 1) % 2 == 0 ? 1 : -1; }  // (-1)^{n+1}

Real rounding(Real mass, std::size_t terms) { return 4 * kEpsilon * mass * std::sqrt(static_cast<Real>(terms) + 1); }

}  // namespace

void PolyDoubleArg::validate() const {
    if (n < 2) throw DomainError("poly-double gamma: order n must be at least 2, got " + std::to_string(n));
    if (!(x > 0)) throw DomainError("poly-double gamma: argument x must be positive");
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::Series: return "series";
        case Method::PolygammaRelation: return "polygamma";
        case Method::Integral: return "integral";
        case Method::Asymptotic: return "asymptotic";
        case Method::Auto: return "auto";
    }
    return "auto";
}

Method parse_method(std::string_view name) {
    for (Method m : {Method::Series, Method::PolygammaRelation, Method::Integral, Method::Asymptotic, Method::Auto}) {
        if (name == to_string(m)) return m;
    }
    throw DomainError("unknown method '" + std::string(name) + "'");
}

void AsymptoticParams::validate() const {
    const int cap = specfun::BernoulliTable::kDefaultCapacity / 2;
    if (N < 1 || N > cap) {
        throw DomainError("asymptotic: N must lie in [1, " + std::to_string(cap) + "], got " + std::to_string(N));
    }
}

Psi2Kernel::Psi2Kernel(int n) : n_(n) {
    if (n < 2) throw DomainError("Psi2Kernel: order must be at least 2");
}

Real Psi2Kernel::operator()(Real t) const {
    if (t == 0) return n_ == 2 ? Real{1} : Real{0};
    const Real d = -std::expm1(-t);
    return std::pow(t, static_cast<Real>(n_)) / (d * d);
}

EvalResult weighted_power_sum(int q, Real x, const Precision& prec) {
    prec.validate();
    if (q < 3) throw DomainError("weighted_power_sum: q must be at least 3");
    if (!(x > 0)) throw DomainError("weighted_power_sum: x must be positive");

    const Real shift = std::max(prec.shift_threshold, static_cast<Real>(q));
    const auto head_terms = x >= shift ? std::size_t{0} : static_cast<std::size_t>(std::ceil(shift - x));
    if (head_terms > prec.max_terms) {
        throw ConvergenceError("weighted_power_sum: head exceeds max_terms", 0, std::numeric_limits<Real>::infinity());
    }
    Real head = 0;
    for (std::size_t k = head_terms; k-- > 0;) {
        const Real kk = static_cast<Real>(k);
        head += (1 + kk) / std::pow(x + kk, static_cast<Real>(q));
    }
    // sum_{k>=K} (1+k)/(x+k)^q = zeta(q-1, x+K) + (1-x) zeta(q, x+K)
    const Real b = x + static_cast<Real>(head_terms);
    const EvalResult z1 = specfun::hurwitz_zeta(q - 1, b, prec);
    const EvalResult z2 = specfun::hurwitz_zeta(q, b, prec);
    const Real tail = z1.value + (1 - x) * z2.value;
    const Real error = z1.error + std::fabs(1 - x) * z2.error + rounding(head + std::fabs(tail), head_terms);
    return {head + tail, error, "series"};
}

EvalResult psi2_series(const PolyDoubleArg& arg, const Precision& prec) {
    arg.validate();
    const EvalResult s = weighted_power_sum(arg.n + 1, arg.x, prec);
    const Real scale = specfun::factorial(arg.n);
    return {sign_for(arg.n) * scale * s.value, scale * s.error, "series"};
}

EvalResult psi2_from_polygamma(const PolyDoubleArg& arg, const Precision& prec) {
    arg.validate();
    const EvalResult lower = specfun::polygamma(arg.n - 1, arg.x, prec);
    const EvalResult upper = specfun::polygamma(arg.n, arg.x, prec);
    const Real a = -arg.n * lower.value;
    const Real b = (1 - arg.x) * upper.value;
    const Real value = a + b;
    const Real error = arg.n * lower.error + std::fabs(1 - arg.x) * upper.error +
                       2 * kEpsilon * (std::fabs(a) + std::fabs(b));
    return {value, error, "polygamma"};
}

EvalResult psi2_from_zeta(const PolyDoubleArg& arg, const Precision& prec) {
    arg.validate();
    const EvalResult z1 = specfun::hurwitz_zeta(arg.n, arg.x, prec);
    const EvalResult z2 = specfun::hurwitz_zeta(arg.n + 1, arg.x, prec);
    const Real scale = specfun::factorial(arg.n);
    const Real a = z1.value;
    const Real b = (1 - arg.x) * z2.value;
    const Real value = sign_for(arg.n) * scale * (a + b);
    const Real error =
        scale * (z1.error + std::fabs(1 - arg.x) * z2.error + 2 * kEpsilon * (std::fabs(a) + std::fabs(b)));
    return {value, error, "zeta"};
}

EvalResult psi2_integral(const PolyDoubleArg& arg, Real tol) {
    arg.validate();
    if (!(tol > 0)) throw DomainError("psi2_integral: tolerance must be positive");
    const Psi2Kernel kernel(arg.n);
    const Real x = arg.x;
    const Real d1 = -std::expm1(Real{-1});
    quadrature::IntegrandSpec spec;
    spec.evaluate = [kernel, x](Real t) { return std::exp(-x * t) * kernel(t); };
    spec.decay_rate = x;
    spec.origin_order = arg.n - 2;
    spec.growth_order = arg.n;
    spec.envelope = 1 / (d1 * d1);
    const auto q = quadrature::integrate_semi_infinite(spec, tol);
    return {sign_for(arg.n) * q.value, q.error_estimate, "integral"};
}

EvalResult psi2_eval(const PolyDoubleArg& arg, Method method, const Precision& prec) {
    arg.validate();
    prec.validate();
    switch (method) {
        case Method::Series: return psi2_series(arg, prec);
        case Method::PolygammaRelation: return psi2_from_polygamma(arg, prec);
        case Method::Integral: return psi2_integral(arg, prec.abs_tol);
        case Method::Asymptotic: break;
        case Method::Auto:
            if (arg.x <= prec.shift_threshold || arg.n >= 8) return psi2_series(arg, prec);
            break;
    }

    // Large-x branch: expansion at x - 1, or at x plus one recurrence step when x <= 1.
    const AsymptoticParams params{6, false};
    EvalResult r;
    if (arg.x > 1) {
        r = psi2_asymptotic({arg.n, arg.x - 1}, params, prec);
    } else {
        r = psi2_asymptotic(arg, params, prec);
        const EvalResult p = specfun::polygamma(arg.n, arg.x, prec);
        r.value += p.value;
        r.error += p.error;
    }
    r.method = "asymptotic";
    return r;
}

EvalResult psi2(int n, Real x, const Precision& prec) { return psi2_eval(PolyDoubleArg{n, x}, Method::Auto, prec); }

}  // namespace polydg
