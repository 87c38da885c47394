#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "polydg/polydg.hpp"
#include "polydg/verify.hpp"

namespace polydg::detail {

/// A value with an absolute error bound; arithmetic propagates first-order error plus rounding.
struct Val {
    Real v = 0;
    Real e = 0;
};

inline Val operator+(Val a, Val b) {
    const Real v = a.v + b.v;
    return {v, a.e + b.e + kEpsilon * (std::fabs(a.v) + std::fabs(b.v))};
}

inline Val operator-(Val a, Val b) {
    const Real v = a.v - b.v;
    return {v, a.e + b.e + kEpsilon * (std::fabs(a.v) + std::fabs(b.v))};
}

inline Val operator*(Val a, Val b) {
    const Real v = a.v * b.v;
    return {v, std::fabs(a.v) * b.e + std::fabs(b.v) * a.e + a.e * b.e + kEpsilon * std::fabs(v)};
}

inline Val operator*(Real s, Val a) { return {s * a.v, std::fabs(s) * a.e + kEpsilon * std::fabs(s * a.v)}; }

inline Val operator/(Val a, Val b) {
    const Real v = a.v / b.v;
    return {v, (a.e + std::fabs(v) * b.e) / std::fabs(b.v) + kEpsilon * std::fabs(v)};
}

inline Val to_val(const EvalResult& r) { return {r.value, r.error}; }

/// psi_2^{(order)}(x) by the default dispatcher.
inline Val psi(int order, Real x) { return to_val(psi2(order, x)); }

inline Real sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

enum class Relation { Strict, NonStrict, Equal };

/// Files a witness into the report. Strict: margin > kStrictFactor * error passes, a margin within
/// that band is inconclusive, anything lower is a counterexample. NonStrict: margin >= -band passes.
/// Equal: |margin| <= band passes.
void record(verify::CheckReport& report, verify::Witness w, Relation rel);

verify::Witness make_witness(std::vector<double> point, Real lhs, Real rhs, Real margin, Real error,
                             std::string label);

void finalize(verify::CheckReport& report);

nlohmann::json grid_json(const verify::Grid& grid);

}  // namespace polydg::detail
