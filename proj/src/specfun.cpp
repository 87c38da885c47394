#include "polydg/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polydg::specfun {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Absolute error attributed to rounding when `terms` values of combined magnitude `mass` are added.
Real rounding(Real mass, std::size_t terms = 16) {
    return 4 * kEpsilon * mass * std::sqrt(static_cast<Real>(terms) + 1);
}

struct Tail {
    Real value;
    Real error;
};

// sum_{k>=0} (b + k)^{-s} by Euler-Maclaurin at b >= shift threshold: integral tail,
// boundary half-term and Bernoulli corrections until they stop shrinking.
Tail power_tail(int s, Real b) {
    const auto& bern = BernoulliTable::instance();
    Real sum = std::pow(b, static_cast<Real>(1 - s)) / (s - 1) + std::pow(b, static_cast<Real>(-s)) / 2;
    Real mass = std::fabs(sum);
    Real poch = s;  // s (s+1) ... (s+2j-2)
    Real bpow = std::pow(b, static_cast<Real>(-s - 1));
    Real prev = std::numeric_limits<Real>::infinity();
    Real omitted = 0;
    for (int j = 1;; ++j) {
        if (2 * j > bern.capacity()) {
            omitted = prev;
            break;
        }
        const Real term = bern[2 * j] / factorial(2 * j) * poch * bpow;
        const Real mag = std::fabs(term);
        if (mag >= prev) {
            omitted = mag;
            break;
        }
        if (mag <= kEpsilon * std::fabs(sum) / 4) {
            omitted = mag;
            break;
        }
        sum += term;
        mass += mag;
        prev = mag;
        poch *= static_cast<Real>(s + 2 * j - 1) * static_cast<Real>(s + 2 * j);
        bpow /= b * b;
    }
    return {sum, omitted + rounding(mass)};
}

}  // namespace

void Precision::validate() const {
    if (!(abs_tol > 0)) throw DomainError("Precision: abs_tol must be positive");
    if (max_terms < 16) throw DomainError("Precision: max_terms must be at least 16");
    if (!(shift_threshold >= 8)) throw DomainError("Precision: shift_threshold must be at least 8");
}

BernoulliTable::BernoulliTable(int capacity) {
    if (capacity < 1) throw DomainError("BernoulliTable: capacity must be at least 1");
    std::vector<cpp_rational> b(capacity + 1);
    b[0] = 1;
    for (int q = 1; q <= capacity; ++q) {
        // B_q = -1/(q+1) * sum_{i<q} C(q+1, i) B_i
        cpp_rational acc = 0;
        cpp_int binom = 1;  // C(q+1, 0)
        for (int i = 0; i < q; ++i) {
            acc += cpp_rational(binom) * b[i];
            binom = binom * (q + 1 - i) / (i + 1);
        }
        b[q] = -acc / (q + 1);
    }
    values_.reserve(b.size());
    for (const auto& r : b) {
        // numerator/denominator each fit comfortably in long double range
        values_.push_back(static_cast<Real>(numerator(r).convert_to<long double>()) /
                          static_cast<Real>(denominator(r).convert_to<long double>()));
    }
}

const BernoulliTable& BernoulliTable::instance() {
    static const BernoulliTable table;
    return table;
}

Real BernoulliTable::operator[](int k) const {
    if (k < 0 || k > capacity()) {
        throw RangeError("Bernoulli index " + std::to_string(k) + " outside table capacity " +
                         std::to_string(capacity()));
    }
    return values_[static_cast<std::size_t>(k)];
}

Real bernoulli(int k) { return BernoulliTable::instance()[k]; }

Real factorial(int n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    Real f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

EvalResult hurwitz_zeta(int s, Real a, const Precision& prec) {
    prec.validate();
    if (s < 2) throw DomainError("hurwitz_zeta: s must be at least 2 for convergence");
    if (!(a > 0)) throw DomainError("hurwitz_zeta: a must be positive");

    const Real shift = std::max(prec.shift_threshold, static_cast<Real>(s));
    const auto head_terms = a >= shift ? std::size_t{0} : static_cast<std::size_t>(std::ceil(shift - a));
    if (head_terms > prec.max_terms) {
        throw ConvergenceError("hurwitz_zeta: head exceeds max_terms", 0, std::numeric_limits<Real>::infinity());
    }
    Real head = 0;
    for (std::size_t k = head_terms; k-- > 0;) head += std::pow(a + static_cast<Real>(k), static_cast<Real>(-s));
    const Tail tail = power_tail(s, a + static_cast<Real>(head_terms));
    return {head + tail.value, tail.error + rounding(head, head_terms), "euler-maclaurin"};
}

EvalResult polygamma(int n, Real x, const Precision& prec) {
    prec.validate();
    if (n < 0) throw DomainError("polygamma: order must be non-negative");
    if (!(x > 0)) throw DomainError("polygamma: x must be positive");

    const auto& bern = BernoulliTable::instance();
    const Real threshold = std::max(prec.shift_threshold, static_cast<Real>(n + 1));
    const auto shifts = x >= threshold ? std::size_t{0} : static_cast<std::size_t>(std::ceil(threshold - x));
    if (shifts > prec.max_terms) {
        throw ConvergenceError("polygamma: recurrence shift exceeds max_terms", 0,
                               std::numeric_limits<Real>::infinity());
    }
    const Real y = x + static_cast<Real>(shifts);

    // Asymptotic series at y; error is the first omitted term.
    Real sum = 0;
    Real mass = 0;
    Real omitted = 0;
    Real prev = std::numeric_limits<Real>::infinity();
    if (n == 0) {
        sum = std::log(y) - 1 / (2 * y);
        mass = std::fabs(std::log(y)) + 1 / (2 * y);
        Real ypow = 1 / (y * y);
        for (int k = 1;; ++k) {
            if (2 * k > bern.capacity()) {
                omitted = prev;
                break;
            }
            const Real term = -bern[2 * k] / (2 * k) * ypow;
            const Real mag = std::fabs(term);
            if (mag >= prev || mag <= kEpsilon * std::fabs(sum) / 4) {
                omitted = mag;
                break;
            }
            sum += term;
            mass += mag;
            prev = mag;
            ypow /= y * y;
        }
    } else {
        const Real lead = factorial(n - 1) / std::pow(y, static_cast<Real>(n));
        sum = lead + factorial(n) / (2 * std::pow(y, static_cast<Real>(n + 1)));
        mass = sum;
        // coefficient (2k+n-1)!/(2k)! advanced by (2k+n)(2k+n+1)/((2k+1)(2k+2))
        Real coeff = factorial(n + 1) / 2;
        Real ypow = std::pow(y, static_cast<Real>(-n - 2));
        for (int k = 1;; ++k) {
            if (2 * k > bern.capacity()) {
                omitted = prev;
                break;
            }
            const Real term = bern[2 * k] * coeff * ypow;
            const Real mag = std::fabs(term);
            if (mag >= prev || mag <= kEpsilon * std::fabs(sum) / 4) {
                omitted = mag;
                break;
            }
            sum += term;
            mass += mag;
            prev = mag;
            coeff *= static_cast<Real>(2 * k + n) * static_cast<Real>(2 * k + n + 1) /
                     (static_cast<Real>(2 * k + 1) * static_cast<Real>(2 * k + 2));
            ypow /= y * y;
        }
        if (n % 2 == 0) sum = -sum;
    }

    // Shift back: psi^{(n)}(x) = psi^{(n)}(x+m) - sum_{i<m} (-1)^n n! / (x+i)^{n+1}
    Real shift_sum = 0;
    const Real nfact = factorial(n);
    for (std::size_t i = shifts; i-- > 0;) {
        shift_sum += nfact / std::pow(x + static_cast<Real>(i), static_cast<Real>(n + 1));
    }
    const Real signed_shift = (n % 2 == 0) ? shift_sum : -shift_sum;
    const Real value = sum - signed_shift;
    const Real error = omitted + rounding(mass) + rounding(shift_sum, shifts) + 2 * kEpsilon * std::fabs(value);
    return {value, error, shifts > 0 ? "shift+asymptotic" : "asymptotic"};
}

Real log_gamma(Real x) {
    if (!(x > 0)) throw DomainError("log_gamma: x must be positive");
    return std::lgamma(x);
}

}  // namespace polydg::specfun
