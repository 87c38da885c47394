#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "polydg/polydg.hpp"

namespace polydg::verify {

enum class Spacing { Linear, Logarithmic, Explicit };

/// A finite sample of (0, inf). Explicit grids carry their own points.
struct Grid {
    double lo = 0.05;
    double hi = 50;
    int count = 200;
    Spacing spacing = Spacing::Logarithmic;
    std::vector<double> explicit_points;

    static Grid linear(double lo, double hi, int count);
    static Grid logarithmic(double lo, double hi, int count);
    static Grid at(std::vector<double> points);

    void validate() const;
    std::vector<double> points() const;
};

/// One evaluated instance of an inequality. `margin` is positive when the claim holds.
struct Witness {
    std::vector<double> point;
    double lhs = 0;
    double rhs = 0;
    double margin = 0;
    double error = 0;
    std::string label;
};

struct CheckReport {
    std::string check_id;
    nlohmann::json params = nlohmann::json::object();
    bool passed = true;
    std::vector<Witness> witnesses;
    std::vector<Witness> counterexamples;
    std::vector<Witness> inconclusive;
    double tolerance_used = 0;
    std::map<std::string, double> metrics;
    std::string note = "numerical certification at finite depth and on a finite grid only";
};

/// Multiple of the combined error estimate a margin must exceed to count as strict.
inline constexpr double kStrictFactor = 10;

struct FParams {
    int n = 3;
    double omega = 0.25;
    int derivative_depth = 6;

    void validate() const;
};

struct GParams {
    int n = 3;
    double r = 1;

    void validate() const;
};

struct SubAddParams {
    int n = 2;
    int r = 0;
    double m = 2;
    int samples = 200;
    std::uint64_t seed = 0;

    void validate() const;
};

struct HankelParams {
    int n = 2;
    int j = 1;
    int m = 1;

    void validate() const;
};

/// Pairs (x1, x2) with x1, x2 in (0, m) and x1 + x2 <= m from a shifted R2 low-discrepancy
/// sequence; the shift is drawn from the seed, so the same seed gives the same pairs.
std::vector<std::pair<double, double>> triangle_samples(double m, int count, std::uint64_t seed);

CheckReport check_cm(int n, int depth, const Grid& grid);
CheckReport check_turan(int n, const Grid& grid);
CheckReport check_ratio_bounds(int n, const Grid& grid);
CheckReport check_F_cm(const FParams& params, const Grid& grid);
/// Runs check_F_cm at the midpoint of the gap and passes when both sign patterns fail.
CheckReport check_F_gap(int n, int depth, const Grid& grid);
CheckReport check_lemma_I1(int n, const Grid& a_grid, double tol);
CheckReport check_subadditivity(const SubAddParams& params);
CheckReport check_G_convexity(const GParams& params, const Grid& grid, int pair_samples = 50, std::uint64_t seed = 0);
CheckReport check_hankel_cm(const HankelParams& params, int depth, const Grid& grid);
CheckReport check_cauchy_schwarz(int n, const Grid& grid);

/// F_n(x; omega) and its k-th derivative by the Leibniz rule on exact derivative orders.
EvalResult F_derivative(int n, Real omega, int k, Real x);

/// I_1(a; n) over (0, 1) with f_n(t) = t^{n-1} / (1 - e^{-t})^2.
EvalResult lemma_I1(int n, Real a, Real tol);

/// Determinant of the (m+1)x(m+1) matrix of psi_2^{(n + (i+l) j + row_shift_i)}(y); with
/// `condition` set, receives the infinity-norm condition estimate after equilibration.
EvalResult hankel_determinant(const HankelParams& params, const std::vector<int>& row_shift, Real y,
                              double* condition = nullptr);

struct AuditEntry {
    std::string identity_id;
    std::string formula;  // the representation under test, in words
    std::string status;  // "confirmed" or "discrepancy"
    double max_deviation = 0;
    double error_estimate = 0;
    std::string note;
};

std::vector<AuditEntry> audit_identities(const Precision& prec = {});

struct SuiteOptions {
    Grid grid;  // default log grid [0.05, 50], 200 points
    int depth = 6;
    std::uint64_t seed = 0;
    int samples = 200;
    double tol = 1e-12;
};

/// Every check with its default parameters, evaluated concurrently and returned in a
/// fixed (check id, parameter) order.
std::vector<CheckReport> run_suite(const SuiteOptions& options = {});

/// Identifiers of the individual checks, in suite order.
const std::vector<std::string>& check_ids();

}  // namespace polydg::verify
