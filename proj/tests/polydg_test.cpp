#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "polydg/polydg.hpp"

using namespace polydg;

namespace {

constexpr int kOrders[] = {2, 3, 4, 5, 6};
constexpr Real kPoints[] = {0.3L, 0.5L, 1, 2, 5, 10};

Real rel(Real a, Real b) { return std::fabs(a - b) / std::max<Real>(1, std::fabs(b)); }

}  // namespace

TEST_SUITE("polydg") {

TEST_CASE("series at x = 1 reduces to (-1)^{n+1} n! zeta(n)") {
    CHECK(std::fabs(psi2_series({2, 1}).value + oracle::pi * oracle::pi / 3) < 1e-15L);
    CHECK(std::fabs(psi2_series({3, 1}).value - 6 * oracle::zeta3) < 1e-15L);
    CHECK(std::fabs(psi2_series({4, 1}).value + 24 * oracle::zeta4) < 1e-14L);
    CHECK(std::fabs(psi2_series({5, 1}).value - 120 * oracle::zeta5) < 1e-13L);
}

TEST_CASE("series at x = 2 and 3 from shifted zeta sums") {
    // sum (1+k)/(2+k)^3 = zeta(2) - zeta(3); sum (1+k)/(3+k)^3 = (zeta(2) - 5/4) - 2 (zeta(3) - 9/8)
    CHECK(std::fabs(psi2_series({2, 2}).value + 2 * (oracle::zeta2 - oracle::zeta3)) < 1e-15L);
    const Real s3 = (oracle::zeta2 - 1.25L) - 2 * (oracle::zeta3 - 1.125L);
    CHECK(std::fabs(psi2_series({2, 3}).value + 2 * s3) < 1e-15L);
}

TEST_CASE("series against brute-force summation") {
    for (int n : kOrders) {
        for (Real x : kPoints) {
            const Real brute = oracle::psi2_brute(n, x, 200'000);
            CHECK(rel(psi2_series({n, x}).value, brute) < 1e-11L);
        }
    }
}

TEST_CASE("all representations agree with the boost-based reference") {
    for (int n : kOrders) {
        for (Real x : kPoints) {
            const Real ref = oracle::psi2(n, x);
            const EvalResult s = psi2_series({n, x});
            CHECK(rel(s.value, ref) < 1e-13L);
            CHECK(s.error < 1e-12L * std::max<Real>(1, std::fabs(ref)));
            CHECK(std::fabs(psi2_from_polygamma({n, x}).value - s.value) <= 1e-10L);
            CHECK(std::fabs(psi2_from_zeta({n, x}).value - s.value) <= 1e-10L);
            const EvalResult q = psi2_integral({n, x}, 1e-11L);
            CHECK(std::fabs(q.value - s.value) <= 1e-8L);
        }
    }
}

TEST_CASE("recurrence psi_2^{(n)}(x+1) + psi^{(n)}(x) = psi_2^{(n)}(x)") {
    for (int n : kOrders) {
        for (Real x : kPoints) {
            const Real lhs = psi2_series({n, x + 1}).value + boost::math::polygamma(n, x);
            CHECK(rel(lhs, psi2_series({n, x}).value) < 1e-12L);
        }
    }
}

TEST_CASE("asymptotic expansion with remainder reproduces the series") {
    for (int n = 2; n <= 5; ++n) {
        for (int N : {2, 4, 6}) {
            for (Real x : {1.0L, 2.5L, 7.0L, 20.0L}) {
                const EvalResult a = psi2_asymptotic({n, x}, {N, true});
                CHECK(std::fabs(a.value - oracle::psi2(n, x + 1)) < 1e-9L);
            }
        }
    }
}

TEST_CASE("truncated expansion error shrinks with x") {
    Real previous = 1;
    for (Real x : {10.0L, 20.0L, 40.0L, 80.0L}) {
        const EvalResult a = psi2_asymptotic({3, x}, {4, false});
        const Real dev = std::fabs(a.value - oracle::psi2(3, x + 1));
        CHECK(dev <= 2 * a.error + 1e-18L);
        CHECK(a.error < previous);
        previous = a.error;
    }
}

TEST_CASE("bernoulli remainder behaves like t^{2N+2} near the origin") {
    for (int N : {1, 2, 4}) {
        const Real t = 1e-2L;
        const Real r = bernoulli_remainder(t, N);
        const Real lead = specfun::bernoulli(2 * N + 2) * std::pow(t, Real(2 * N + 2)) / oracle::factorial(2 * N + 2);
        CHECK(std::fabs(r / lead - 1) < 1e-3L);
    }
    CHECK(std::fabs(bernoulli_remainder(5, 2) -
                    (5 / std::expm1(5.0L) - (1 - 2.5L + 25.0L / 12 - 625.0L / 720))) < 1e-15L);
}

TEST_CASE("kernel") {
    const Psi2Kernel k(3);
    CHECK(k.order() == 3);
    const Real t = 0.7L;
    CHECK(std::fabs(k(t) - std::pow(t, Real(3)) / std::pow(1 - std::exp(-t), Real(2))) < 1e-16L);
    CHECK_THROWS_AS(Psi2Kernel(1), DomainError);
}

TEST_CASE("dispatch") {
    for (Real x : {0.05L, 3.0L, 11.0L, 13.0L, 50.0L, 4e4L}) {
        for (int n : {2, 3, 9}) {
            const EvalResult r = psi2(n, x);
            const Real ref = oracle::psi2(n, x);
            CHECK(std::fabs(r.value - ref) <= 1e-12L * std::max<Real>(1, std::fabs(ref)));
        }
    }
    CHECK(psi2(2, 1).method == "series");
    CHECK(psi2(2, 50).method == "asymptotic");
    CHECK(psi2_eval({2, 1}, Method::Integral).method.find("integral") != std::string::npos);
    CHECK(parse_method("polygamma") == Method::PolygammaRelation);
    CHECK(to_string(Method::Asymptotic) == "asymptotic");
    CHECK_THROWS_AS(parse_method("simpson"), DomainError);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(psi2_series({1, 1}), DomainError);
    CHECK_THROWS_AS(psi2_series({2, 0}), DomainError);
    CHECK_THROWS_AS(psi2_series({2, -3}), DomainError);
    CHECK_THROWS_AS(psi2_integral({2, 1}, 0), DomainError);
    CHECK_THROWS_AS(psi2_asymptotic({2, 1}, {0, false}), DomainError);
    CHECK_THROWS_AS(psi2_didouble(0), DomainError);
    CHECK_THROWS_AS(log_barnes_g(-1), DomainError);
    CHECK_THROWS_AS(weighted_power_sum(2, 1), DomainError);
}

TEST_CASE("di-double gamma") {
    const Real at_one = Real(0.5) - std::log(2 * oracle::pi) / 2 + 1 + oracle::euler_gamma;
    CHECK(std::fabs(psi2_didouble(1).value - at_one) < 1e-15L);
    for (Real x : {0.05L, 0.5L, 2.0L, 7.3L, 30.0L, 500.0L}) {
        CHECK(rel(psi2_didouble(x).value, oracle::psi2_didouble(x)) < 1e-13L);
    }
}

TEST_CASE("log Barnes G") {
    CHECK(std::fabs(log_barnes_g(1).value) < 1e-16L);
    CHECK(std::fabs(log_barnes_g(2).value) < 1e-16L);
    CHECK(std::fabs(log_barnes_g(3).value) < 1e-15L);
    CHECK(std::fabs(log_barnes_g(4).value - std::log(2.0L)) < 1e-15L);
    CHECK(std::fabs(log_barnes_g(5).value - std::log(12.0L)) < 1e-14L);
    const Real half = 3 * oracle::zeta_prime_minus_one / 2 + std::log(2.0L) / 24 - std::log(oracle::pi) / 4;
    CHECK(std::fabs(log_barnes_g(0.5L).value - half) < 1e-15L);
    for (Real x : {0.3L, 1.7L, 6.2L, 25.0L}) {
        const Real step = log_barnes_g(x + 1).value - log_barnes_g(x).value;
        CHECK(std::fabs(step - std::lgamma(x)) < 1e-12L * std::max<Real>(1, std::fabs(step)));
    }
}

}
