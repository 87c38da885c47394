#include <algorithm>
#include <cmath>
#include <random>

#include "detail.hpp"

namespace polydg::verify {

Grid Grid::linear(double lo, double hi, int count) { return Grid{lo, hi, count, Spacing::Linear, {}}; }

Grid Grid::logarithmic(double lo, double hi, int count) { return Grid{lo, hi, count, Spacing::Logarithmic, {}}; }

Grid Grid::at(std::vector<double> points) {
    Grid g;
    g.spacing = Spacing::Explicit;
    g.explicit_points = std::move(points);
    g.count = static_cast<int>(g.explicit_points.size());
    if (!g.explicit_points.empty()) {
        const auto [lo, hi] = std::minmax_element(g.explicit_points.begin(), g.explicit_points.end());
        g.lo = *lo;
        g.hi = *hi;
    }
    return g;
}

void Grid::validate() const {
    if (spacing == Spacing::Explicit) {
        if (explicit_points.empty()) throw DomainError("grid: explicit grid has no points");
        for (double p : explicit_points) {
            if (!(p > 0) || !std::isfinite(p)) throw DomainError("grid: points must be finite and positive");
        }
        return;
    }
    if (!(lo > 0) || !std::isfinite(hi)) throw DomainError("grid: lo must be positive and hi finite");
    if (!(hi > lo)) throw DomainError("grid: hi must exceed lo");
    if (count < 2) throw DomainError("grid: count must be at least 2");
}

std::vector<double> Grid::points() const {
    validate();
    if (spacing == Spacing::Explicit) return explicit_points;
    std::vector<double> pts(static_cast<std::size_t>(count));
    const double last = count - 1;
    for (int i = 0; i < count; ++i) {
        if (spacing == Spacing::Linear) {
            pts[i] = lo + (hi - lo) * (i / last);
        } else {
            pts[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * (i / last));
        }
    }
    pts.front() = lo;
    pts.back() = hi;
    return pts;
}

std::vector<std::pair<double, double>> triangle_samples(double m, int count, std::uint64_t seed) {
    if (!(m > 0)) throw DomainError("triangle_samples: m must be positive");
    if (count < 1) throw DomainError("triangle_samples: count must be at least 1");
    // R2 sequence: reciprocal powers of the plastic number.
    constexpr double g = 1.32471795724474602596;
    constexpr double a1 = 1 / g;
    constexpr double a2 = 1 / (g * g);
    std::mt19937_64 engine(seed);
    const auto unit = [&engine]() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
    const double s1 = unit();
    const double s2 = unit();

    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 1; out.size() < static_cast<std::size_t>(count); ++i) {
        double u = std::fmod(s1 + i * a1, 1.0);
        double v = std::fmod(s2 + i * a2, 1.0);
        if (u + v > 1) {
            u = 1 - u;
            v = 1 - v;
        }
        if (u <= 0 || v <= 0) continue;
        out.emplace_back(m * u, m * v);
    }
    return out;
}

}  // namespace polydg::verify

namespace polydg::detail {

verify::Witness make_witness(std::vector<double> point, Real lhs, Real rhs, Real margin, Real error,
                             std::string label) {
    verify::Witness w;
    w.point = std::move(point);
    w.lhs = static_cast<double>(lhs);
    w.rhs = static_cast<double>(rhs);
    w.margin = static_cast<double>(margin);
    w.error = static_cast<double>(error);
    w.label = std::move(label);
    return w;
}

void record(verify::CheckReport& report, verify::Witness w, Relation rel) {
    const double band = verify::kStrictFactor * w.error;
    report.tolerance_used = std::max(report.tolerance_used, band);
    bool counter = false;
    bool unsure = false;
    if (!std::isfinite(w.margin)) {
        counter = true;
        w.margin = 0;
    } else {
        switch (rel) {
            case Relation::Strict:
                counter = w.margin < -band;
                unsure = !counter && w.margin <= band;
                break;
            case Relation::NonStrict: counter = w.margin < -band; break;
            case Relation::Equal: counter = std::fabs(w.margin) > band; break;
        }
    }
    if (counter) report.counterexamples.push_back(w);
    if (unsure) report.inconclusive.push_back(w);
    report.witnesses.push_back(std::move(w));
}

void finalize(verify::CheckReport& report) { report.passed = report.counterexamples.empty(); }

nlohmann::json grid_json(const verify::Grid& grid) {
    nlohmann::json j;
    switch (grid.spacing) {
        case verify::Spacing::Linear: j["spacing"] = "linear"; break;
        case verify::Spacing::Logarithmic: j["spacing"] = "log"; break;
        case verify::Spacing::Explicit: j["spacing"] = "explicit"; break;
    }
    if (grid.spacing == verify::Spacing::Explicit) {
        j["points"] = grid.explicit_points;
    } else {
        j["lo"] = grid.lo;
        j["hi"] = grid.hi;
        j["count"] = grid.count;
    }
    return j;
}

}  // namespace polydg::detail
