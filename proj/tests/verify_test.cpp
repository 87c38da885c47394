#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "polydg/report.hpp"
#include "polydg/verify.hpp"

using namespace polydg;
using namespace polydg::verify;

namespace {

bool all_margins_positive(const CheckReport& r) {
    return std::all_of(r.witnesses.begin(), r.witnesses.end(), [](const Witness& w) { return w.margin > 0; });
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("grids") {
    const auto lin = Grid::linear(1, 3, 5).points();
    REQUIRE(lin.size() == 5);
    CHECK(lin[2] == doctest::Approx(2));
    const auto lg = Grid::logarithmic(0.05, 50, 200).points();
    REQUIRE(lg.size() == 200);
    CHECK(lg.front() == 0.05);
    CHECK(lg.back() == 50);
    CHECK(lg[1] / lg[0] == doctest::Approx(lg[150] / lg[149]));
    CHECK(Grid::at({0.1, 5, 20}).points() == std::vector<double>{0.1, 5, 20});
    CHECK_THROWS_AS(Grid::linear(0, 1, 10).validate(), DomainError);
    CHECK_THROWS_AS(Grid::linear(2, 1, 10).validate(), DomainError);
    CHECK_THROWS_AS(Grid::linear(1, 2, 1).validate(), DomainError);
    CHECK_THROWS_AS(Grid::at({}).validate(), DomainError);
}

TEST_CASE("triangle samples are deterministic and admissible") {
    const auto a = triangle_samples(2, 300, 7);
    const auto b = triangle_samples(2, 300, 7);
    const auto c = triangle_samples(2, 300, 8);
    CHECK(a == b);
    CHECK(a != c);
    for (const auto& [x1, x2] : a) {
        CHECK(x1 > 0);
        CHECK(x2 > 0);
        CHECK(x1 + x2 <= 2);
    }
    CHECK_THROWS_AS(triangle_samples(0, 10, 0), DomainError);
}

TEST_CASE("complete monotonicity of (-1)^{n+1} psi_2^{(n)}") {
    for (int n : {2, 3, 5}) {
        const CheckReport r = check_cm(n, 6, Grid::logarithmic(0.05, 50, 60));
        CHECK(r.passed);
        CHECK(r.counterexamples.empty());
        CHECK(r.inconclusive.empty());
        CHECK(r.witnesses.size() == 7 * 60);
        CHECK(all_margins_positive(r));
    }
}

TEST_CASE("Turan inequality at x = 1 from closed forms") {
    const CheckReport r = check_turan(2, Grid::at({1}));
    REQUIRE(r.witnesses.size() == 1);
    const Real mid = -2 * (oracle::zeta2 - oracle::zeta3);
    const Real three = -2 * ((oracle::zeta2 - 1.25L) - 2 * (oracle::zeta3 - 1.125L));
    const Real at_one = -2 * oracle::zeta2;
    CHECK(r.witnesses[0].lhs == doctest::Approx(static_cast<double>(mid * mid)).epsilon(1e-12));
    CHECK(r.witnesses[0].rhs == doctest::Approx(static_cast<double>(at_one * three)).epsilon(1e-12));
    CHECK(r.passed);
    CHECK(check_turan(4, Grid::logarithmic(0.05, 50, 80)).passed);
}

TEST_CASE("ratio bounds approach their constants at the ends") {
    for (int n : {3, 6}) {
        const CheckReport r = check_ratio_bounds(n, Grid::logarithmic(0.05, 1e4, 80));
        CHECK(r.passed);
        CHECK(r.metrics.at("lower_bound") == doctest::Approx((n - 2.0) / (n - 1)));
        CHECK(r.metrics.at("upper_bound") == doctest::Approx(n / (n + 1.0)));
        CHECK(std::fabs(r.metrics.at("ratio_at_hi") - (n - 2.0) / (n - 1)) < 1e-3);
        CHECK(std::fabs(r.metrics.at("ratio_at_lo") - n / (n + 1.0)) < 5e-2);
    }
    const CheckReport at_one = check_ratio_bounds(3, Grid::at({1}));
    // psi_2^{(3)}(1)^2 / (psi_2^{(2)}(1) psi_2^{(4)}(1)) = 36 zeta(3)^2 / (48 zeta(2) zeta(4))
    const Real expected = 36 * oracle::zeta3 * oracle::zeta3 / (48 * oracle::zeta2 * oracle::zeta4);
    CHECK(std::fabs(at_one.metrics.at("ratio_sup") - static_cast<double>(expected)) < 1e-12);
}

TEST_CASE("F derivatives against finite differences") {
    const Real x = 1.3L, h = 1e-4L;
    for (int k = 0; k < 3; ++k) {
        const Real fd = (F_derivative(3, 0.25L, k, x + h).value - F_derivative(3, 0.25L, k, x - h).value) / (2 * h);
        CHECK(std::fabs(fd - F_derivative(3, 0.25L, k + 1, x).value) < 1e-6L * std::max<Real>(1, std::fabs(fd)));
    }
}

TEST_CASE("F sign patterns hold at the sharp constants and fail inside the gap") {
    const Grid grid = Grid::logarithmic(0.05, 50, 80);
    for (int n : {3, 4}) {
        CHECK(check_F_cm({n, (n - 2.0) / (n - 1), 6}, grid).passed);
        CHECK(check_F_cm({n, n / (n + 1.0), 6}, grid).passed);
        const double mid = ((n - 2.0) / (n - 1) + n / (n + 1.0)) / 2;
        const CheckReport inside = check_F_cm({n, mid, 6}, grid);
        CHECK_FALSE(inside.passed);
        CHECK(inside.metrics.at("F_failures") > 0);
        CHECK(inside.metrics.at("negF_failures") > 0);
        const CheckReport gap = check_F_gap(n, 6, grid);
        CHECK(gap.passed);
        CHECK(gap.counterexamples.empty());
    }
    CHECK_THROWS_AS(check_F_cm({2, 0.5, 6}, grid), DomainError);
}

TEST_CASE("auxiliary integral is negative") {
    for (int n : {3, 4}) {
        const CheckReport r = check_lemma_I1(n, Grid::linear(1.01, 1.99, 25), 1e-12);
        CHECK(r.passed);
        CHECK(r.inconclusive.empty());
    }
}

TEST_CASE("sub- and superadditivity with midpoint attainment") {
    for (int n : {2, 3}) {
        for (int r : {0, 1, 2}) {
            const CheckReport rep = check_subadditivity({n, r, 2, 100, 3});
            CHECK(rep.passed);
            CHECK(rep.inconclusive.empty());
            const auto mid = std::find_if(rep.witnesses.begin(), rep.witnesses.end(),
                                          [](const Witness& w) { return w.label == "midpoint"; });
            REQUIRE(mid != rep.witnesses.end());
            CHECK(std::fabs(mid->lhs - mid->rhs) <= 10 * mid->error + 1e-300);
            const int p = n + r;
            const Real sharp = oracle::psi2(p, 2) - 2 * oracle::psi2(p, 1);
            CHECK(std::fabs(rep.metrics.at("sharp_bound") - static_cast<double>(sharp)) < 1e-10);
        }
    }
}

TEST_CASE("G convexity regions") {
    const Grid grid = Grid::logarithmic(0.05, 50, 60);
    CHECK(check_G_convexity({3, 1}, grid).passed);
    CHECK(check_G_convexity({3, -1}, grid).passed);
    CHECK(check_G_convexity({3, -0.1}, grid).passed);
    CHECK(check_G_convexity({3, -0.375}, grid, 0).params.at("region") == "gap");
    CHECK_THROWS_AS(check_G_convexity({3, 0}, grid), DomainError);
}

TEST_CASE("Hankel determinant of order two at y = 1") {
    // psi_2^{(n)}(1) = (-1)^{n+1} n! zeta(n)
    const Real d2 = -2 * oracle::zeta2, d3 = 6 * oracle::zeta3, d4 = -24 * oracle::zeta4;
    double cond = 0;
    const EvalResult det = hankel_determinant({2, 1, 1}, {0, 0}, 1, &cond);
    CHECK(std::fabs(det.value - (d2 * d4 - d3 * d3)) < 1e-10L);
    CHECK(cond >= 1);
    CHECK_THROWS_AS(hankel_determinant({2, 1, 5}, {0, 0, 0, 0, 0, 0}, 1), DomainError);
    CHECK_THROWS_AS(hankel_determinant({2, 1, 1}, {0}, 1), DomainError);
}

TEST_CASE("Hankel sign pattern") {
    const Grid grid = Grid::logarithmic(0.05, 50, 40);
    for (int m : {1, 2, 3}) {
        for (int j : {1, 2}) {
            const CheckReport r = check_hankel_cm({3, j, m}, 1, grid);
            CHECK(r.passed);
            CHECK(r.inconclusive.empty());
        }
    }
}

TEST_CASE("Cauchy-Schwarz pair") {
    const CheckReport r = check_cauchy_schwarz(4, Grid::logarithmic(0.05, 50, 60));
    CHECK(r.passed);
    CHECK(r.params.at("constant").get<double>() == doctest::Approx(10.0 / 12));
}

TEST_CASE("suite order and determinism") {
    const auto& ids = check_ids();
    CHECK(ids.size() == 10);
    SuiteOptions opts;
    opts.grid = Grid::logarithmic(0.05, 50, 20);
    opts.samples = 20;
    const auto a = run_suite(opts);
    const auto b = run_suite(opts);
    CHECK(a == b);
    CHECK(nlohmann::json(a).dump() == nlohmann::json(b).dump());
    for (const auto& r : a) {
        CHECK_MESSAGE(r.passed, r.check_id << ' ' << r.params.dump());
        CHECK(std::find(ids.begin(), ids.end(), r.check_id) != ids.end());
    }
}

}
