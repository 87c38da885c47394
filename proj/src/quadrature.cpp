#include "polydg/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <tuple>
#include <vector>

namespace polydg::quadrature {

namespace {

// Kronrod abscissae on [-1, 1] (non-negative half); odd indices are the 7-point Gauss nodes.
constexpr std::array<Real, 8> kNodes = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L,
};
constexpr std::array<Real, 8> kKronrodWeights = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L,
};
constexpr std::array<Real, 4> kGaussWeights = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L,
};

struct Segment {
    Real a;
    Real b;
    Real value;
    Real error;
    Real magnitude;  // integral of |f| estimate, used for the rounding floor

    bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment gauss_kronrod15(const F& f, Real a, Real b) {
    const Real center = (a + b) / 2;
    const Real half = (b - a) / 2;
    std::array<Real, 15> fx{};
    const Real fc = f(center);
    Real kronrod = kKronrodWeights[7] * fc;
    Real gauss = kGaussWeights[3] * fc;
    Real abs_sum = std::fabs(kronrod);
    for (int i = 0; i < 7; ++i) {
        const Real dx = half * kNodes[i];
        const Real f1 = f(center - dx);
        const Real f2 = f(center + dx);
        fx[2 * i] = f1;
        fx[2 * i + 1] = f2;
        kronrod += kKronrodWeights[i] * (f1 + f2);
        abs_sum += kKronrodWeights[i] * (std::fabs(f1) + std::fabs(f2));
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
    }
    const Real mean = kronrod / 2;
    Real asc = kKronrodWeights[7] * std::fabs(fc - mean);
    for (int i = 0; i < 7; ++i) {
        asc += kKronrodWeights[i] * (std::fabs(fx[2 * i] - mean) + std::fabs(fx[2 * i + 1] - mean));
    }

    const Real value = kronrod * half;
    const Real resabs = abs_sum * std::fabs(half);
    const Real resasc = asc * std::fabs(half);
    Real err = std::fabs((kronrod - gauss) * half);
    if (resasc != 0 && err != 0) err = resasc * std::min<Real>(1, std::pow(200 * err / resasc, Real{1.5}));
    err = std::max(err, 50 * kEpsilon * resabs);
    return {a, b, value, err, resabs};
}

template <class F>
QuadratureResult adaptive(const F& f, const std::vector<Real>& breaks, Real tol, const Options& opts) {
    std::priority_queue<Segment> heap;
    std::size_t evaluations = 0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        heap.push(gauss_kronrod15(f, breaks[i], breaks[i + 1]));
        evaluations += 15;
    }

    auto totals = [&heap]() {
        // Sum smallest-error segments first.
        auto copy = heap;
        std::vector<Segment> segs;
        segs.reserve(copy.size());
        while (!copy.empty()) {
            segs.push_back(copy.top());
            copy.pop();
        }
        Real value = 0;
        Real error = 0;
        Real magnitude = 0;
        for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
            value += it->value;
            error += it->error;
            magnitude += it->magnitude;
        }
        return std::tuple{value, error, magnitude};
    };

    Real value = 0;
    Real error = 0;
    Real magnitude = 0;
    std::tie(value, error, magnitude) = totals();
    // Targets below the rounding level of the integrand cannot be met; settle for that level.
    auto target = [&]() { return std::max(tol, 200 * kEpsilon * magnitude); };
    std::size_t subdivisions = heap.size();
    while (error > target()) {
        if (subdivisions >= opts.max_subdivisions) {
            throw ConvergenceError("quadrature: subdivision limit reached", value, error);
        }
        const Segment worst = heap.top();
        const Real mid = (worst.a + worst.b) / 2;
        if (!(mid > worst.a && mid < worst.b)) {
            throw ConvergenceError("quadrature: interval cannot be bisected further", value, error);
        }
        heap.pop();
        const Segment left = gauss_kronrod15(f, worst.a, mid);
        const Segment right = gauss_kronrod15(f, mid, worst.b);
        evaluations += 30;
        ++subdivisions;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        magnitude += left.magnitude + right.magnitude - worst.magnitude;
        heap.push(left);
        heap.push(right);
        if (error <= target()) std::tie(value, error, magnitude) = totals();
    }
    return {value, error, evaluations};
}

void require_finite_interval(Real a, Real b, Real tol) {
    if (!(a < b)) throw DomainError("integrate_finite: requires a < b");
    if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate_finite: endpoints must be finite");
    if (!(tol > 0)) throw DomainError("integrate: tolerance must be positive");
}

}  // namespace

QuadratureResult integrate_finite(const IntegrandSpec& f, Real a, Real b, Real tol, const Options& opts) {
    require_finite_interval(a, b, tol);
    if (!f.evaluate) throw DomainError("integrate_finite: integrand is empty");
    if (!(f.origin_order > -1)) throw DomainError("integrate_finite: origin_order must exceed -1");

    if (a == 0 && f.origin_order < 0) {
        const auto g = [&f](Real u) { return 2 * u * f.evaluate(u * u); };
        return adaptive(g, {0, std::sqrt(b)}, tol, opts);
    }
    return adaptive(f.evaluate, {a, b}, tol, opts);
}

Real exponential_tail_bound(Real envelope, Real p, Real r, Real T) {
    if (!(r * T > p)) return std::numeric_limits<Real>::infinity();
    // t^p e^{-rt} <= T^p e^{-rT} e^{-(r - p/T)(t - T)} for t >= T
    return envelope * std::pow(T, p) * std::exp(-r * T) / (r - p / T);
}

QuadratureResult integrate_semi_infinite(const IntegrandSpec& f, Real tol, const Options& opts) {
    if (!f.evaluate) throw DomainError("integrate_semi_infinite: integrand is empty");
    if (!(f.decay_rate > 0)) throw DomainError("integrate_semi_infinite: integrand has no exponential decay");
    if (!(tol > 0)) throw DomainError("integrate: tolerance must be positive");
    if (!(f.origin_order > -1)) throw DomainError("integrate_semi_infinite: origin_order must exceed -1");

    const Real r = f.decay_rate;
    const Real p = std::max<Real>(f.growth_order, 0);
    Real T = std::max<Real>(1, 2 * p / r + 1);
    Real tail = exponential_tail_bound(f.envelope, p, r, T);
    while (tail > tol / 2) {
        T *= Real{1.1};
        tail = exponential_tail_bound(f.envelope, p, r, T);
    }

    // Geometric breakpoints resolve the bulk near the peak at ~p/r without wasting effort.
    std::vector<Real> breaks{0};
    Real edge = std::min<Real>(T, 1 / r) / 4;
    while (edge < T) {
        breaks.push_back(edge);
        edge *= 2;
    }
    breaks.push_back(T);

    QuadratureResult body;
    if (f.origin_order < 0) {
        const auto g = [&f](Real u) { return 2 * u * f.evaluate(u * u); };
        std::vector<Real> ubreaks;
        ubreaks.reserve(breaks.size());
        for (Real t : breaks) ubreaks.push_back(std::sqrt(t));
        body = adaptive(g, ubreaks, tol / 2, opts);
    } else {
        body = adaptive(f.evaluate, breaks, tol / 2, opts);
    }
    body.error_estimate += tail;
    return body;
}

}  // namespace polydg::quadrature
