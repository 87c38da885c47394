#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "polydg/polydg.hpp"

namespace polydg {

namespace {

using specfun::Constants;

std::size_t head_length(Real z, const Precision& prec, const char* who) {
    const Real k = std::max<Real>(16, std::ceil(2 * std::fabs(z) + 1));
    if (k > static_cast<Real>(prec.max_terms)) {
        throw ConvergenceError(std::string(who) + ": head exceeds max_terms", 0, std::numeric_limits<Real>::infinity());
    }
    return static_cast<std::size_t>(k);
}

struct Sum {
    Real value = 0;
    Real error = 0;
};

// sum_{j >= j0} c_j * zeta(j + offset, a) with c_j = coeff(j); |ratio of consecutive c_j| <= 1/2 of a.
template <class Coeff>
Sum zeta_power_series(Coeff coeff, int j0, int offset, Real a, const Precision& prec) {
    Sum s;
    Real mass = 0;
    for (int j = j0;; ++j) {
        const Real c = coeff(j);
        if (c == 0) break;
        const EvalResult z = specfun::hurwitz_zeta(j + offset, a, prec);
        const Real term = c * z.value;
        s.value += term;
        s.error += std::fabs(c) * z.error;
        mass += std::fabs(term);
        // consecutive terms shrink at least geometrically by 1/2, so the rest is below |term|
        if (std::fabs(term) <= kEpsilon * std::fabs(s.value) / 8 || j > 4000) {
            s.error += std::fabs(term);
            break;
        }
    }
    s.error += 4 * kEpsilon * mass;
    return s;
}

}  // namespace

EvalResult psi2_didouble(Real x, const Precision& prec) {
    prec.validate();
    if (!(x > 0)) throw DomainError("psi2_didouble: x must be positive");
    const Real d = x - 1;
    const std::size_t K = head_length(d, prec, "psi2_didouble");

    Real head = 0;
    for (std::size_t k = K; k-- > 0;) {
        const Real kk = static_cast<Real>(k);
        head += d * d / ((kk + 1) * (x + kk));
    }
    // For k >= K: 1/((k+1)(x+k)) = sum_j (1-x)^j / (k+1)^{j+2}
    const Sum tail = zeta_power_series(
        [d](int j) { return d * d * std::pow(-d, static_cast<Real>(j)); }, 0, 2, static_cast<Real>(K + 1), prec);

    const Real linear = -Constants::log_two_pi / 2 + (1 + Constants::euler_gamma) * x + Real{0.5};
    const Real value = linear - head - tail.value;
    const Real error = tail.error + 4 * kEpsilon * (std::fabs(linear) + head) * std::sqrt(static_cast<Real>(K));
    return {value, error, "series"};
}

EvalResult log_barnes_g(Real x, const Precision& prec) {
    prec.validate();
    if (!(x > 0)) throw DomainError("log_barnes_g: x must be positive");
    const Real z = x - 1;
    const std::size_t K = head_length(z, prec, "log_barnes_g");

    // l_k = k log(1 + z/k) - z + z^2/(2k) = k * sum_{j>=3} (-1)^{j+1} (z/k)^j / j
    Real head = 0;
    Real mass = 0;
    for (std::size_t k = K - 1; k >= 1; --k) {
        const Real kk = static_cast<Real>(k);
        const Real u = z / kk;
        Real l;
        if (std::fabs(u) < Real{0.25}) {
            l = 0;
            Real power = u * u * u;
            for (int j = 3; j < 200; ++j) {
                const Real term = (j % 2 == 1 ? 1 : -1) * power / j;
                l += term;
                if (std::fabs(term) <= kEpsilon * std::fabs(l) / 8) break;
                power *= u;
            }
            l *= kk;
        } else {
            l = kk * std::log1p(u) - z + z * z / (2 * kk);
        }
        head += l;
        mass += std::fabs(l) + std::fabs(z);
    }
    // sum_{k>=K} l_k = sum_{j>=3} (-1)^{j+1} z^j / j * zeta(j-1, K)
    const Sum tail = zeta_power_series(
        [z](int j) { return (j % 2 == 1 ? 1 : -1) * std::pow(z, static_cast<Real>(j)) / j; }, 3, -1,
        static_cast<Real>(K), prec);

    const Real lead = z / 2 * Constants::log_two_pi - ((1 + Constants::euler_gamma) * z * z + z) / 2;
    const Real value = lead + head + tail.value;
    const Real error = tail.error + 4 * kEpsilon * (std::fabs(lead) + mass);
    return {value, error, "weierstrass-product"};
}

}  // namespace polydg
