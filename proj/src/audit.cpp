#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "detail.hpp"
#include "polydg/quadrature.hpp"

namespace polydg::verify {

namespace {

using specfun::factorial;

constexpr int kOrders[] = {2, 3, 4, 5, 6};

std::string short_number(Real v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2Le", v);
    return buf;
}

constexpr Real kPoints[] = {0.3L, 0.5L, 1, 2, 5, 10};

/// Running comparison of a stated representation against a reference value.
class Tally {
public:
    void add(Real stated, Real stated_error, Real reference, Real reference_error) {
        const Real dev = std::fabs(stated - reference);
        const Real err = stated_error + reference_error + 64 * kEpsilon * std::max(std::fabs(stated), std::fabs(reference));
        add_deviation(dev, err);
    }

    void add_deviation(Real dev, Real err) {
        max_dev_ = std::max(max_dev_, dev);
        max_err_ = std::max(max_err_, err);
        if (dev > 100 * err && dev / err > worst_ratio_) {
            worst_ratio_ = dev / err;
            worst_err_ = err;
        }
    }

    AuditEntry entry(std::string id, std::string formula, std::string note) const {
        AuditEntry e;
        e.identity_id = std::move(id);
        e.formula = std::move(formula);
        const bool discrepancy = worst_ratio_ > 0;
        e.status = discrepancy ? "discrepancy" : "confirmed";
        e.max_deviation = static_cast<double>(max_dev_);
        e.error_estimate = static_cast<double>(discrepancy ? worst_err_ : max_err_);
        e.note = std::move(note);
        return e;
    }

private:
    Real max_dev_ = 0;
    Real max_err_ = 0;
    Real worst_ratio_ = 0;
    Real worst_err_ = 0;
};

EvalResult series(int n, Real x, const Precision& prec) { return psi2_series({n, x}, prec); }

AuditEntry audit_integral(const Precision& prec) {
    Tally t;
    for (int n : kOrders) {
        for (Real x : kPoints) {
            const EvalResult a = psi2_integral({n, x}, prec.abs_tol / 10);
            const EvalResult b = series(n, x, prec);
            t.add(a.value, a.error, b.value, b.error);
        }
    }
    return t.entry("integral-representation", "(-1)^{n+1} * integral of e^{-xt} t^n / (1 - e^{-t})^2",
                   "probes n = 2..6, x in {0.3, 0.5, 1, 2, 5, 10}");
}

AuditEntry audit_polygamma(const Precision& prec) {
    Tally t;
    for (int n : kOrders) {
        for (Real x : kPoints) {
            const EvalResult a = psi2_from_polygamma({n, x}, prec);
            const EvalResult b = series(n, x, prec);
            t.add(a.value, a.error, b.value, b.error);
        }
    }
    return t.entry("polygamma-relation", "-n psi^{(n-1)}(x) + (1 - x) psi^{(n)}(x)",
                   "probes n = 2..6, x in {0.3, 0.5, 1, 2, 5, 10}");
}

AuditEntry audit_zeta(const Precision& prec) {
    Tally t;
    for (int n : kOrders) {
        for (Real x : kPoints) {
            const EvalResult a = psi2_from_zeta({n, x}, prec);
            const EvalResult b = series(n, x, prec);
            t.add(a.value, a.error, b.value, b.error);
        }
    }
    return t.entry("zeta-closed-form", "(-1)^{n+1} n! (zeta(n, x) + (1 - x) zeta(n + 1, x))",
                   "probes n = 2..6, x in {0.3, 0.5, 1, 2, 5, 10}");
}

AuditEntry audit_recurrence(const Precision& prec) {
    Tally t;
    for (int n : kOrders) {
        for (Real x : kPoints) {
            const EvalResult up = series(n, x + 1, prec);
            const EvalResult pg = specfun::polygamma(n, x, prec);
            const EvalResult b = series(n, x, prec);
            t.add(up.value + pg.value, up.error + pg.error, b.value, b.error);
        }
    }
    return t.entry("recurrence", "psi_2^{(n)}(x + 1) + psi^{(n)}(x) = psi_2^{(n)}(x)",
                   "probes n = 2..6, x in {0.3, 0.5, 1, 2, 5, 10}");
}

AuditEntry audit_lagrange(const Precision& prec) {
    Tally t;
    Real pair_deviation = 0;
    // Brute-force pair sum against the product form on the same truncated sums.
    {
        const int n = 3;
        const Real x = 1;
        const int L = 10000;
        std::vector<Real> w(L), p(L), q(L);
        Real s0 = 0, s1 = 0, s2 = 0;
        for (int k = L - 1; k >= 0; --k) {
            const Real b = x + k;
            w[k] = 1 + k;
            p[k] = std::pow(b, -Real(n) / 2);
            q[k] = std::pow(b, -Real(n + 2) / 2);
            s0 += w[k] * p[k] * p[k];
            s1 += w[k] * p[k] * q[k];
            s2 += w[k] * q[k] * q[k];
        }
        Real pairs = 0;
        Real mass = 0;
        for (int k = 0; k < L; ++k) {
            Real inner = 0;
            for (int j = k + 1; j < L; ++j) {
                const Real d = p[k] * q[j] - p[j] * q[k];
                inner += w[j] * d * d;
            }
            pairs += w[k] * inner;
            mass += w[k] * inner;
        }
        const Real scale = factorial(n) * factorial(n);
        const Real product = s0 * s2 - s1 * s1;
        const Real err = 16 * kEpsilon * std::sqrt(Real(L)) * scale * (mass + s0 * s2 + s1 * s1);
        t.add(scale * pairs, err, scale * product, 0);
        pair_deviation = std::fabs(scale * (pairs - product));
    }
    // -F_n(x; n/(n+1)) = n!^2 (S_n S_{n+2} - S_{n+1}^2) with S_q = sum (1+k)/(x+k)^q.
    for (int n = 3; n <= 6; ++n) {
        for (Real x : kPoints) {
            const EvalResult F = F_derivative(n, static_cast<Real>(n) / (n + 1), 0, x);
            const detail::Val a = detail::to_val(weighted_power_sum(n, x, prec));
            const detail::Val b = detail::to_val(weighted_power_sum(n + 1, x, prec));
            const detail::Val c = detail::to_val(weighted_power_sum(n + 2, x, prec));
            const detail::Val rhs = factorial(n) * factorial(n) * (a * c - b * b);
            t.add(-F.value, F.error, rhs.v, rhs.e);
        }
    }
    return t.entry("lagrange-identity",
                   "-F_n(x; n/(n+1)) = n!^2 (S_n S_{n+2} - S_{n+1}^2) = n!^2 sum_{k<j} (1+k)(1+j)(a_k b_j - a_j b_k)^2",
                   "pair sum truncated at 10^4 terms (n = 3, x = 1) compared with the same truncation of the "
                   "product form, deviation " + short_number(pair_deviation) +
                       "; F form on n = 3..6 at the standard probe points");
}

AuditEntry audit_hankel(bool stated) {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
        for (Real x : kPoints) {
            const detail::Val a = detail::psi(n, x);
            const detail::Val c = detail::psi(n + 2, x);
            const detail::Val b = stated ? a : detail::psi(n + 1, x);
            const detail::Val d = a * c - b * b;
            const Real value = (stated ? detail::sign_pow(n + 1) : 1) * d.v;
            // Deviation is the amount by which the claimed non-negativity is violated.
            t.add_deviation(value < 0 ? -value : 0, d.e + 64 * kEpsilon * (std::fabs(a.v * c.v) + b.v * b.v));
        }
    }
    if (stated) {
        return t.entry("hankel-order-two-stated", "(-1)^{n+1} (psi_2^{(n)} psi_2^{(n+2)} - (psi_2^{(n)})^2) >= 0",
                       "the order-2 determinant with j = 1 carries sign (-1)^{2(n+1)} = 1 and the squared entry "
                       "psi_2^{(n+1)}; the stated form is negative for even n, e.g. n = 2, x = 1 gives -74.63");
    }
    return t.entry("hankel-order-two", "psi_2^{(n)} psi_2^{(n+2)} - (psi_2^{(n+1)})^2 >= 0",
                   "reading with the off-diagonal entry squared and no extra sign; holds at every probe");
}

// (-1)^{n+1} integral t^{n-3} e^{-xt} (t/(e^t-1) - sum_{k=1}^{2N} B_k t^k / k!) dt
EvalResult tau_stated(int n, Real x, int N, Real tol) {
    const auto& bern = specfun::BernoulliTable::instance();
    Real envelope = 2;
    for (int k = 1; k <= 2 * N; ++k) envelope += std::fabs(bern[k]) / factorial(k);
    quadrature::IntegrandSpec spec;
    spec.evaluate = [n, x, N](Real t) {
        return std::pow(t, static_cast<Real>(n - 3)) * std::exp(-x * t) * (1 + bernoulli_remainder(t, N));
    };
    spec.decay_rate = x;
    spec.origin_order = n - 3;
    spec.growth_order = n - 3 + 2 * N;
    spec.envelope = envelope;
    const auto q = quadrature::integrate_semi_infinite(spec, tol);
    return {detail::sign_pow(n + 1) * q.value, q.error_estimate, "quadrature"};
}

Real sigma_stated(int n, Real x, int N) {
    const auto& bern = specfun::BernoulliTable::instance();
    Real sum = 0;
    for (int k = 1; k <= N - 1; ++k) {
        sum += bern[2 * k + 2] * factorial(2 * k + n - 1) / factorial(2 * k + 2) /
               std::pow(x, static_cast<Real>(2 * k + n));
    }
    return detail::sign_pow(n + 1) * sum;
}

constexpr Real kAsymPoints[] = {1, 2, 5, 10};
constexpr int kAsymN[] = {2, 4};

AuditEntry audit_tau(const Precision& prec) {
    Tally t;
    for (int n = 3; n <= 5; ++n) {
        for (Real x : kAsymPoints) {
            for (int N : kAsymN) {
                const EvalResult closed = asymptotic_closed_terms(n, x, prec);
                const EvalResult tau = tau_stated(n, x, N, prec.abs_tol);
                const EvalResult ref = series(n, x + 1, prec);
                t.add(closed.value + asymptotic_sigma(n, x, N) + tau.value, closed.error + tau.error, ref.value,
                      ref.error);
            }
        }
    }
    // n = 2: the stated integrand behaves like -1/t at the origin. For a convergent integral the
    // contribution of (1e-12, 1e-6) would vanish; here it is about log(10^6).
    {
        const int n = 2;
        const Real x = 1;
        const int N = 2;
        quadrature::IntegrandSpec spec;
        spec.evaluate = [=](Real s) {
            const Real tt = std::exp(s);
            return tt * std::pow(tt, static_cast<Real>(n - 3)) * std::exp(-x * tt) * (1 + bernoulli_remainder(tt, N));
        };
        const auto q = quadrature::integrate_finite(spec, std::log(Real(1e-12)), std::log(Real(1e-6)), 1e-14L);
        t.add_deviation(std::fabs(q.value), q.error_estimate + 64 * kEpsilon * std::fabs(q.value));
    }
    return t.entry("tau-stated",
                   "(-1)^{n+1} integral t^{n-3} e^{-xt} (t/(e^t - 1) - sum_{k=1}^{2N} B_k t^k / k!) dt",
                   "closed terms plus derived sigma plus the stated remainder, against the series at x + 1 for "
                   "n = 3..5, x in {1, 2, 5, 10}, N in {2, 4}; for n = 2 the integrand tends to -1/t at the "
                   "origin and the integral over (1e-12, 1e-6) is reported. The identity holds with weight "
                   "t^{n-2}, the sum from k = 0 and sign (-1)^n");
}

AuditEntry audit_sigma(const Precision& prec) {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
        for (Real x : kAsymPoints) {
            for (int N : kAsymN) {
                const EvalResult closed = asymptotic_closed_terms(n, x, prec);
                const EvalResult tau = asymptotic_tau(n, x, N, prec.abs_tol);
                const EvalResult ref = series(n, x + 1, prec);
                t.add(closed.value + sigma_stated(n, x, N) + tau.value, closed.error + tau.error, ref.value,
                      ref.error);
            }
        }
    }
    return t.entry("sigma-stated", "(-1)^{n+1} sum_{k=1}^{N-1} B_{2k+2} (2k+n-1)! / ((2k+2)! x^{2k+n})",
                   "closed terms plus the stated sigma plus the derived remainder, against the series at x + 1; "
                   "n-fold differentiation gives (-1)^n B_{2k+2} (2k+n)! / ((2k+2)! x^{2k+n+1})");
}

// Difference psi_2^{(p)}(m/2) - psi_2^{(p)}(m) from the series.
Real half_minus_full(int p, Real m, const Precision& prec, Real& err) {
    const EvalResult a = series(p, m / 2, prec);
    const EvalResult b = series(p, m, prec);
    err = a.error + b.error;
    return a.value - b.value;
}

AuditEntry audit_half_shift_zeta(const Precision& prec) {
    Tally t;
    for (int n = 2; n <= 3; ++n) {
        for (int r = 0; r <= 1; ++r) {
            for (Real m : {Real(1), Real(2), Real(3)}) {
                const int p = n + r;
                const auto z = [&](int s, Real a) { return specfun::hurwitz_zeta(s, a, prec); };
                const EvalResult a1 = z(p, m / 2), a2 = z(p + 1, m / 2), b1 = z(p, m), b2 = z(p + 1, m);
                const Real f = factorial(p);
                const Real stated = detail::sign_pow(n + 1) * f * (2 * a1.value + (2 - m) * a2.value) +
                                    detail::sign_pow(n - 1) * f * (b1.value + (1 - m) * b2.value);
                const Real stated_err = f * (2 * a1.error + std::fabs(2 - m) * a2.error + b1.error +
                                             std::fabs(1 - m) * b2.error);
                Real ref_err = 0;
                const Real ref = half_minus_full(p, m, prec, ref_err);
                t.add(stated, stated_err, ref, ref_err);
            }
        }
    }
    return t.entry("half-shift-zeta-identity",
                   "psi_2^{(n+r)}(m/2) - psi_2^{(n+r)}(m) = (-1)^{n+1} (n+r)! (2 zeta(n+r, m/2) + (2-m) zeta(n+r+1, m/2)) "
                   "+ (-1)^{n-1} (n+r)! (zeta(n+r, m) + (1-m) zeta(n+r+1, m))",
                   "probes n in {2, 3}, r in {0, 1}, m in {1, 2, 3}; the stated right side doubles the m/2 term "
                   "and, for even r, adds instead of subtracting the m term");
}

AuditEntry audit_half_shift_polygamma(const Precision& prec) {
    Tally t;
    for (int n = 2; n <= 3; ++n) {
        for (int r = 0; r <= 1; ++r) {
            for (Real m : {Real(1), Real(2), Real(3)}) {
                const int p = n + r;
                const auto pg = [&](int k, Real a) { return specfun::polygamma(k, a, prec); };
                const EvalResult a1 = pg(p - 1, m / 2), a2 = pg(p, m / 2), b1 = pg(p - 1, m), b2 = pg(p, m);
                const Real stated = -2 * p * a1.value + (2 - m) * a2.value + p * b1.value - (1 - m) * b2.value;
                const Real stated_err =
                    2 * p * a1.error + std::fabs(2 - m) * a2.error + p * b1.error + std::fabs(1 - m) * b2.error;
                Real ref_err = 0;
                const Real ref = half_minus_full(p, m, prec, ref_err);
                t.add(stated, stated_err, ref, ref_err);
            }
        }
    }
    return t.entry("half-shift-polygamma-identity",
                   "psi_2^{(n+r)}(m/2) - psi_2^{(n+r)}(m) = -2(n+r) psi^{(n+r-1)}(m/2) + (2-m) psi^{(n+r)}(m/2) "
                   "+ (n+r) psi^{(n+r-1)}(m) - (1-m) psi^{(n+r)}(m)",
                   "probes n in {2, 3}, r in {0, 1}, m in {1, 2, 3}; the stated right side equals "
                   "2 psi_2^{(n+r)}(m/2) - psi_2^{(n+r)}(m)");
}

AuditEntry audit_vigneras() {
    Tally t;
    // At x = 0 the integrand vanishes identically, leaving the constant; log Gamma_2(1) = -log G(1) = 0.
    const Real stated = -Real(1.5) * std::log(specfun::Constants::pi);
    t.add(stated, 4 * kEpsilon, 0, 0);
    return t.entry("vigneras-constant",
                   "log Gamma_2(x+1) = -integral e^{-t} / (t (1-e^{-t})^2) (1 - xt - x^2 t^2 / 2 - e^{-xt}) dt "
                   "+ (1+gamma) x^2 / 2 - (3/2) log pi",
                   "at x = 0 the formula gives -(3/2) log pi instead of 0; for x != 0 the integrand behaves like "
                   "-x^2 / t at the origin, so the integral does not converge as written. Constants drop out "
                   "after two derivatives, so the order n >= 2 functions are unaffected");
}

AuditEntry audit_didouble_integral(const Precision& prec) {
    Tally t;
    // At x = 0: integrand t - t e^0 + 0 vanishes, so the stated value is 0.
    const EvalResult ref = psi2_didouble(1, prec);
    t.add(0, 4 * kEpsilon, ref.value, ref.error);
    return t.entry("didouble-integral-normalization",
                   "psi_2(x+1) = integral e^{-t} / (t (1-e^{-t})^2) (t + x t^2 - t e^{-xt}) dt + (1+gamma) x",
                   "at x = 0 the formula gives 0 while the series gives psi_2(1) = 1.1582771317; for x != 0 the "
                   "integrand behaves like 2x / t at the origin");
}

}  // namespace

std::vector<AuditEntry> audit_identities(const Precision& prec) {
    prec.validate();
    return {
        audit_integral(prec),
        audit_polygamma(prec),
        audit_zeta(prec),
        audit_recurrence(prec),
        audit_lagrange(prec),
        audit_hankel(false),
        audit_tau(prec),
        audit_sigma(prec),
        audit_half_shift_zeta(prec),
        audit_half_shift_polygamma(prec),
        audit_vigneras(),
        audit_didouble_integral(prec),
        audit_hankel(true),
    };
}

}  // namespace polydg::verify
