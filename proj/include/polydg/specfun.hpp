#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "polydg/core.hpp"

namespace polydg::specfun {

/// Accuracy controls shared by every series-based evaluator.
///
/// `abs_tol` is the target absolute error, `max_terms` caps direct summation and
/// `shift_threshold` is the argument above which asymptotic expansions are trusted.
struct Precision {
    Real abs_tol = 1e-12L;
    std::size_t max_terms = 1'000'000;
    Real shift_threshold = 12;

    /// Throws DomainError when abs_tol <= 0, max_terms < 16 or shift_threshold < 8.
    void validate() const;
};

/// Even and odd Bernoulli numbers B_0..B_capacity, generated once from the defining
/// recurrence sum_{i=0}^{q} C(q+1, i) B_i = 0 in exact rational arithmetic.
class BernoulliTable {
public:
    static constexpr int kDefaultCapacity = 64;

    explicit BernoulliTable(int capacity = kDefaultCapacity);

    /// Process-wide table of default capacity; built on first use, read-only afterwards.
    static const BernoulliTable& instance();

    int capacity() const noexcept { return static_cast<int>(values_.size()) - 1; }
    const std::vector<Real>& values() const noexcept { return values_; }

    /// B_k; throws RangeError when k exceeds the capacity.
    Real operator[](int k) const;

private:
    std::vector<Real> values_;
};

struct Constants {
    static constexpr Real pi = std::numbers::pi_v<Real>;
    static constexpr Real euler_gamma = std::numbers::egamma_v<Real>;
    static constexpr Real log_two_pi = 1.837877066409345483560659472811235279723L;
};

Real bernoulli(int k);

/// n! as a Real (exact for n <= 25 in extended precision).
Real factorial(int n);

/// zeta(s, a) = sum_{k>=0} (k + a)^{-s} for integer s >= 2 and a > 0.
EvalResult hurwitz_zeta(int s, Real a, const Precision& prec = {});

/// psi^{(n)}(x); n = 0 is the digamma function.
EvalResult polygamma(int n, Real x, const Precision& prec = {});

/// Natural log of the Euler gamma function for x > 0.
Real log_gamma(Real x);

}  // namespace polydg::specfun
