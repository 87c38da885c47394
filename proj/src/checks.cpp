#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "detail.hpp"
#include "polydg/quadrature.hpp"

namespace polydg::verify {

using detail::make_witness;
using detail::psi;
using detail::record;
using detail::Relation;
using detail::sign_pow;
using detail::Val;

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

double binomial(int k, int j) {
    double c = 1;
    for (int i = 1; i <= j; ++i) c = c * (k - j + i) / i;
    return c;
}

Val F_derivative_val(int n, Real omega, int k, Real x) {
    Val sum;
    for (int j = 0; j <= k; ++j) {
        const Real c = binomial(k, j);
        const Val square = psi(n + j, x) * psi(n + k - j, x);
        const Val cross = psi(n - 1 + j, x) * psi(n + 1 + k - j, x);
        sum = sum + c * (square - omega * cross);
    }
    return sum;
}

// Records the alternating-sign pattern of sign * F up to depth; returns the number of failures.
std::size_t scan_F_pattern(CheckReport& report, int n, Real omega, int depth, const std::vector<double>& pts,
                           Real sign, const std::string& tag) {
    const std::size_t before = report.counterexamples.size();
    for (double x : pts) {
        for (int k = 0; k <= depth; ++k) {
            const Val d = F_derivative_val(n, omega, k, x);
            const Real lhs = sign * sign_pow(k) * d.v;
            record(report, make_witness({x}, lhs, 0, lhs, d.e, tag + " k=" + std::to_string(k)), Relation::Strict);
        }
    }
    return report.counterexamples.size() - before;
}

Real lower_constant(int n) { return static_cast<Real>(n - 2) / (n - 1); }
Real upper_constant(int n) { return static_cast<Real>(n) / (n + 1); }

}  // namespace

void FParams::validate() const {
    require(n >= 3, "F-cm: n must be at least 3");
    require(std::isfinite(omega), "F-cm: omega must be finite");
    require(derivative_depth >= 0, "F-cm: derivative depth must be non-negative");
}

void GParams::validate() const {
    require(n >= 3, "G-convexity: n must be at least 3");
    require(r != 0 && std::isfinite(r), "G-convexity: r must be finite and non-zero");
}

void SubAddParams::validate() const {
    require(n >= 2, "subadditivity: n must be at least 2");
    require(r >= 0, "subadditivity: r must be non-negative");
    require(m > 0 && std::isfinite(m), "subadditivity: m must be positive");
    require(samples >= 1, "subadditivity: samples must be at least 1");
}

CheckReport check_cm(int n, int depth, const Grid& grid) {
    require(n >= 2, "cm: n must be at least 2");
    require(depth >= 0, "cm: depth must be non-negative");
    CheckReport report;
    report.check_id = "cm";
    report.params = {{"n", n}, {"depth", depth}, {"grid", detail::grid_json(grid)}};
    for (double x : grid.points()) {
        for (int k = 0; k <= depth; ++k) {
            const Val p = psi(n + k, x);
            const Real lhs = sign_pow(n + 1 + k) * p.v;
            record(report, make_witness({x}, lhs, 0, lhs, p.e, "k=" + std::to_string(k)), Relation::Strict);
        }
    }
    detail::finalize(report);
    return report;
}

CheckReport check_turan(int n, const Grid& grid) {
    require(n >= 2, "turan: n must be at least 2");
    CheckReport report;
    report.check_id = "turan";
    report.params = {{"n", n}, {"grid", detail::grid_json(grid)}};
    for (double x : grid.points()) {
        const Val mid = psi(n, x + 1);
        const Val lhs = mid * mid;
        const Val rhs = psi(n, x) * psi(n, x + 2);
        const Val margin = rhs - lhs;
        record(report, make_witness({x}, lhs.v, rhs.v, margin.v, margin.e, "turan"), Relation::Strict);
    }
    detail::finalize(report);
    return report;
}

CheckReport check_ratio_bounds(int n, const Grid& grid) {
    require(n >= 3, "ratio: n must be at least 3");
    CheckReport report;
    report.check_id = "ratio";
    const Real lo = lower_constant(n);
    const Real hi = upper_constant(n);
    report.params = {{"n", n}, {"grid", detail::grid_json(grid)}};
    Real sup = -std::numeric_limits<Real>::infinity();
    Real inf = std::numeric_limits<Real>::infinity();
    const auto pts = grid.points();
    for (double x : pts) {
        const Val a = psi(n, x);
        const Val ratio = (a * a) / (psi(n - 1, x) * psi(n + 1, x));
        sup = std::max(sup, ratio.v);
        inf = std::min(inf, ratio.v);
        if (x == pts.front()) report.metrics["ratio_at_lo"] = static_cast<double>(ratio.v);
        if (x == pts.back()) report.metrics["ratio_at_hi"] = static_cast<double>(ratio.v);
        record(report, make_witness({x}, ratio.v, lo, ratio.v - lo, ratio.e, "lower"), Relation::Strict);
        record(report, make_witness({x}, ratio.v, hi, hi - ratio.v, ratio.e, "upper"), Relation::Strict);
    }
    report.metrics["ratio_sup"] = static_cast<double>(sup);
    report.metrics["ratio_inf"] = static_cast<double>(inf);
    report.metrics["lower_bound"] = static_cast<double>(lo);
    report.metrics["upper_bound"] = static_cast<double>(hi);
    detail::finalize(report);
    return report;
}

EvalResult F_derivative(int n, Real omega, int k, Real x) {
    require(n >= 3, "F: n must be at least 3");
    require(k >= 0, "F: derivative order must be non-negative");
    const Val v = F_derivative_val(n, omega, k, x);
    return {v.v, v.e, "leibniz"};
}

CheckReport check_F_cm(const FParams& params, const Grid& grid) {
    params.validate();
    CheckReport report;
    report.check_id = "F-cm";
    const int n = params.n;
    const Real omega = params.omega;
    const bool F_claim = omega <= static_cast<double>(lower_constant(n));
    const bool negF_claim = omega >= static_cast<double>(upper_constant(n));
    nlohmann::json patterns = nlohmann::json::array();
    if (F_claim || !negF_claim) patterns.push_back("F");
    if (negF_claim || !F_claim) patterns.push_back("-F");
    report.params = {{"n", n},
                     {"omega", params.omega},
                     {"depth", params.derivative_depth},
                     {"patterns", patterns},
                     {"grid", detail::grid_json(grid)}};
    const auto pts = grid.points();
    if (F_claim || !negF_claim) {
        report.metrics["F_failures"] =
            static_cast<double>(scan_F_pattern(report, n, omega, params.derivative_depth, pts, 1, "F"));
    }
    if (negF_claim || !F_claim) {
        report.metrics["negF_failures"] =
            static_cast<double>(scan_F_pattern(report, n, omega, params.derivative_depth, pts, -1, "-F"));
    }
    if (!F_claim && !negF_claim) report.note += "; omega lies strictly between the two constants, no pattern is claimed";
    detail::finalize(report);
    return report;
}

CheckReport check_F_gap(int n, int depth, const Grid& grid) {
    require(n >= 3, "F-gap: n must be at least 3");
    const double omega = static_cast<double>((lower_constant(n) + upper_constant(n)) / 2);
    const CheckReport scan = check_F_cm(FParams{n, omega, depth}, grid);

    CheckReport report;
    report.check_id = "F-gap";
    report.params = {{"n", n}, {"omega", omega}, {"depth", depth}, {"grid", detail::grid_json(grid)}};
    for (const std::string tag : {"F", "-F"}) {
        const auto it = std::find_if(scan.counterexamples.begin(), scan.counterexamples.end(),
                                     [&tag](const Witness& w) { return w.label.rfind(tag + " ", 0) == 0; });
        const auto failures = std::count_if(scan.counterexamples.begin(), scan.counterexamples.end(),
                                            [&tag](const Witness& w) { return w.label.rfind(tag + " ", 0) == 0; });
        report.metrics[tag == "F" ? "F_failures" : "negF_failures"] = static_cast<double>(failures);
        if (it != scan.counterexamples.end()) {
            Witness w = *it;
            w.label = tag + " pattern fails: " + w.label;
            w.margin = -w.margin;  // the failure is the evidence
            report.witnesses.push_back(w);
        } else {
            Witness w;
            w.lhs = 0;
            w.rhs = 1;
            w.margin = -1;
            w.label = tag + " pattern held on the whole grid; expected a failure";
            report.witnesses.push_back(w);
            report.counterexamples.push_back(w);
        }
    }
    detail::finalize(report);
    return report;
}

EvalResult lemma_I1(int n, Real a, Real tol) {
    require(n >= 3, "lemma-I1: n must be at least 3");
    require(a > 0, "lemma-I1: a must be positive");
    const Psi2Kernel f(n - 1);
    const Real c = 2 * n - 3;
    quadrature::IntegrandSpec spec;
    spec.evaluate = [f, a, c](Real x) { return (c * x * x - 1) * f(a * (1 + x)) * f(a * (1 - x)); };
    const auto q = quadrature::integrate_finite(spec, 0, 1, tol);
    return {q.value, q.error_estimate, "gauss-kronrod"};
}

CheckReport check_lemma_I1(int n, const Grid& a_grid, double tol) {
    require(n >= 3, "lemma-I1: n must be at least 3");
    require(tol > 0, "lemma-I1: tolerance must be positive");
    CheckReport report;
    report.check_id = "lemma-I1";
    report.params = {{"n", n}, {"tol", tol}, {"grid", detail::grid_json(a_grid)}};
    for (double a : a_grid.points()) {
        try {
            const EvalResult r = lemma_I1(n, a, tol);
            record(report, make_witness({a}, r.value, 0, -r.value, r.error, "I1 < 0"), Relation::Strict);
        } catch (const ConvergenceError& e) {
            auto w = make_witness({a}, e.best_value(), 0, 0, 0, std::string("quadrature failure: ") + e.what());
            report.witnesses.push_back(w);
            report.counterexamples.push_back(w);
        }
    }
    detail::finalize(report);
    return report;
}

CheckReport check_subadditivity(const SubAddParams& params) {
    params.validate();
    const int p = params.n + params.r;
    const bool sub = (params.n - params.r) % 2 != 0;
    CheckReport report;
    report.check_id = "subadditivity";
    report.params = {{"n", params.n},     {"r", params.r},
                     {"m", params.m},     {"samples", params.samples},
                     {"seed", params.seed}, {"parity", sub ? "differs" : "same"},
                     {"claim", sub ? "subadditive" : "superadditive"}};

    const Real m = params.m;
    const Val fm = psi(p, m);
    const Val fh = psi(p, m / 2);
    const Val sharp = fm - 2 * fh;    // deficit at the midpoint pair
    const Val stated = 2 * fh - fm;   // weaker form with the opposite sign
    report.metrics["sharp_bound"] = static_cast<double>(sharp.v);
    report.metrics["stated_bound"] = static_cast<double>(stated.v);
    const Real dir = sub ? 1 : -1;  // margins are dir * (bound - deficit)

    Real extreme = -dir * std::numeric_limits<Real>::infinity();
    for (const auto& [x1, x2] : triangle_samples(params.m, params.samples, params.seed)) {
        const Val a = psi(p, static_cast<Real>(x1) + x2);
        const Val deficit = a - psi(p, x1) - psi(p, x2);
        extreme = sub ? std::max(extreme, deficit.v) : std::min(extreme, deficit.v);
        const std::vector<double> pt{x1, x2};
        record(report, make_witness(pt, deficit.v, 0, -dir * deficit.v, deficit.e, "plain"), Relation::Strict);
        const Val ms = sharp - deficit;
        record(report, make_witness(pt, deficit.v, sharp.v, dir * ms.v, ms.e, "sharp"), Relation::Strict);
        const Val mp = stated - deficit;
        record(report, make_witness(pt, deficit.v, stated.v, dir * mp.v, mp.e, "stated-bound"), Relation::Strict);
    }
    report.metrics["extreme_deficit"] = static_cast<double>(extreme);

    const Val mid = fm - fh - fh;
    const Val diff = mid - sharp;
    record(report, make_witness({params.m / 2, params.m / 2}, mid.v, sharp.v, -std::fabs(diff.v), diff.e, "midpoint"),
           Relation::Equal);
    detail::finalize(report);
    return report;
}

CheckReport check_G_convexity(const GParams& params, const Grid& grid, int pair_samples, std::uint64_t seed) {
    params.validate();
    const int n = params.n;
    const Real r = params.r;
    enum class Region { Convex, Concave, Gap } region;
    if (r > 0 || r < -Real{1} / (n - 1)) {
        region = Region::Convex;
    } else if (r > -Real{1} / (n + 1)) {
        region = Region::Concave;
    } else {
        region = Region::Gap;
    }
    static constexpr const char* names[] = {"convex", "concave", "gap"};
    CheckReport report;
    report.check_id = "G-convexity";
    report.params = {{"n", n},
                     {"r", params.r},
                     {"region", names[static_cast<int>(region)]},
                     {"pair_samples", pair_samples},
                     {"seed", seed},
                     {"grid", detail::grid_json(grid)}};

    const Real s = sign_pow(n + 1);
    const auto G = [&](Real x) {
        const Val u = s * psi(n, x);
        const Real v = std::pow(u.v, r);
        return Val{v, std::fabs(r) * std::fabs(v) * u.e / u.v + 4 * kEpsilon * std::fabs(v)};
    };

    int positive = 0;
    int negative = 0;
    for (double x : grid.points()) {
        const Val a = psi(n, x);
        const Val b = psi(n + 1, x);
        const Val c = psi(n + 2, x);
        const Val inner = (r - 1) * (b * b) + a * c;
        const Real u = s * a.v;
        const Real scale = r * std::pow(u, r - 2);
        const Real g2 = scale * inner.v;
        const Real err = std::fabs(scale) * (inner.e + std::fabs(inner.v) * (std::fabs(r - 2) * a.e / u + 4 * kEpsilon));
        (g2 > 0 ? positive : negative) += 1;
        switch (region) {
            case Region::Convex:
                record(report, make_witness({x}, g2, 0, g2, err, "G'' > 0"), Relation::Strict);
                break;
            case Region::Concave:
                record(report, make_witness({x}, g2, 0, -g2, err, "G'' < 0"), Relation::Strict);
                break;
            case Region::Gap:
                report.witnesses.push_back(make_witness({x}, g2, 0, std::fabs(g2), err, "gap, not asserted"));
                break;
        }
    }
    report.metrics["second_derivative_positive"] = positive;
    report.metrics["second_derivative_negative"] = negative;

    // G(x) + G(y) < G(x + y) for r < -1/(n-1); reversed on (-1/(n+1), 0).
    if (r < 0 && region != Region::Gap && pair_samples > 0) {
        const Real dir = region == Region::Convex ? 1 : -1;
        for (const auto& [x, y] : triangle_samples(grid.hi, pair_samples, seed)) {
            const Val d = G(static_cast<Real>(x) + y) - G(x) - G(y);
            record(report, make_witness({x, y}, d.v, 0, dir * d.v, d.e, region == Region::Convex ? "superadditive"
                                                                                                 : "subadditive"),
                   Relation::Strict);
        }
    }
    if (region == Region::Gap) report.note += "; r lies in the unclaimed interval, signs are observed only";
    detail::finalize(report);
    return report;
}

CheckReport check_cauchy_schwarz(int n, const Grid& grid) {
    require(n >= 3, "cauchy-schwarz: n must be at least 3");
    const Real c = static_cast<Real>(n * n - n - 2) / (n * n - n);
    CheckReport report;
    report.check_id = "cauchy-schwarz";
    report.params = {{"n", n}, {"constant", static_cast<double>(c)}, {"grid", detail::grid_json(grid)}};
    for (double x : grid.points()) {
        const Val s0 = detail::to_val(weighted_power_sum(n, x));
        const Val s1 = detail::to_val(weighted_power_sum(n + 1, x));
        const Val s2 = detail::to_val(weighted_power_sum(n + 2, x));
        const Val sq = s1 * s1;
        const Val prod = s0 * s2;
        const Val upper = prod - sq;
        const Val lower = sq - c * prod;
        record(report, make_witness({x}, sq.v, prod.v, upper.v, upper.e, "upper"), Relation::Strict);
        record(report, make_witness({x}, sq.v, c * prod.v, lower.v, lower.e, "lower"), Relation::Strict);
    }
    detail::finalize(report);
    return report;
}

}  // namespace polydg::verify
