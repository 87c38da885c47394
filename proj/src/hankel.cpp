#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "detail.hpp"

namespace polydg::verify {

using detail::Val;

namespace {

using Matrix = std::vector<std::vector<Real>>;

struct LU {
    Matrix a;
    std::vector<int> perm;
    Real det = 1;
    bool singular = false;
};

LU factor(Matrix a) {
    const int n = static_cast<int>(a.size());
    LU lu{std::move(a), std::vector<int>(n), 1, false};
    std::iota(lu.perm.begin(), lu.perm.end(), 0);
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        for (int r = c + 1; r < n; ++r) {
            if (std::fabs(lu.a[r][c]) > std::fabs(lu.a[pivot][c])) pivot = r;
        }
        if (lu.a[pivot][c] == 0) {
            lu.singular = true;
            lu.det = 0;
            return lu;
        }
        if (pivot != c) {
            std::swap(lu.a[pivot], lu.a[c]);
            std::swap(lu.perm[pivot], lu.perm[c]);
            lu.det = -lu.det;
        }
        lu.det *= lu.a[c][c];
        for (int r = c + 1; r < n; ++r) {
            const Real f = lu.a[r][c] / lu.a[c][c];
            lu.a[r][c] = f;
            for (int k = c + 1; k < n; ++k) lu.a[r][k] -= f * lu.a[c][k];
        }
    }
    return lu;
}

Real inverse_norm(const LU& lu) {
    const int n = static_cast<int>(lu.a.size());
    std::vector<Real> row_sums(n, 0);
    for (int col = 0; col < n; ++col) {
        std::vector<Real> x(n);
        for (int i = 0; i < n; ++i) x[i] = lu.perm[i] == col ? 1 : 0;
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < i; ++k) x[i] -= lu.a[i][k] * x[k];
        }
        for (int i = n - 1; i >= 0; --i) {
            for (int k = i + 1; k < n; ++k) x[i] -= lu.a[i][k] * x[k];
            x[i] /= lu.a[i][i];
        }
        for (int i = 0; i < n; ++i) row_sums[i] += std::fabs(x[i]);
    }
    return *std::max_element(row_sums.begin(), row_sums.end());
}

void compositions(int total, int parts, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int i = 0; i <= total; ++i) {
        current.push_back(i);
        compositions(total - i, parts - 1, current, out);
        current.pop_back();
    }
}

// Two rows coincide when their leading orders agree; such terms vanish exactly.
bool repeats_row(const std::vector<int>& shift, int stride) {
    for (std::size_t a = 0; a < shift.size(); ++a) {
        for (std::size_t b = a + 1; b < shift.size(); ++b) {
            if (static_cast<int>(a) * stride + shift[a] == static_cast<int>(b) * stride + shift[b]) return true;
        }
    }
    return false;
}

}  // namespace

void HankelParams::validate() const {
    if (n < 2) throw DomainError("hankel: n must be at least 2");
    if (j < 1) throw DomainError("hankel: stride j must be at least 1");
    if (m < 1) throw DomainError("hankel: m must be at least 1");
    if (m > 4) throw DomainError("hankel: orders above m = 4 are rejected");
}

EvalResult hankel_determinant(const HankelParams& params, const std::vector<int>& row_shift, Real y,
                              double* condition) {
    params.validate();
    const int size = params.m + 1;
    if (static_cast<int>(row_shift.size()) != size) throw DomainError("hankel: row shift length mismatch");
    Matrix a(size, std::vector<Real>(size));
    Real rel_entry = 0;
    for (int i = 0; i < size; ++i) {
        for (int l = 0; l < size; ++l) {
            const Val v = detail::psi(params.n + (i + l) * params.j + row_shift[i], y);
            a[i][l] = v.v;
            rel_entry = std::max(rel_entry, v.e / std::fabs(v.v));
        }
    }

    // Equilibrate rows, then columns, and keep the scale factors out of the elimination.
    Real log_scale = 0;
    for (auto& row : a) {
        Real s = 0;
        for (Real v : row) s = std::max(s, std::fabs(v));
        for (Real& v : row) v /= s;
        log_scale += std::log(s);
    }
    for (int l = 0; l < size; ++l) {
        Real s = 0;
        for (int i = 0; i < size; ++i) s = std::max(s, std::fabs(a[i][l]));
        for (int i = 0; i < size; ++i) a[i][l] /= s;
        log_scale += std::log(s);
    }
    Real norm = 0;
    for (const auto& row : a) {
        Real s = 0;
        for (Real v : row) s += std::fabs(v);
        norm = std::max(norm, s);
    }

    const LU lu = factor(a);
    if (lu.singular) {
        if (condition) *condition = std::numeric_limits<double>::max();
        return {0, std::exp(log_scale), "lu-singular"};
    }
    const Real kappa = norm * inverse_norm(lu);
    if (condition) *condition = static_cast<double>(kappa);
    const Real det = lu.det * std::exp(log_scale);
    const Real error = std::fabs(det) * size * kappa * (8 * size * kEpsilon + rel_entry);
    return {det, error, "lu-partial-pivot"};
}

CheckReport check_hankel_cm(const HankelParams& params, int depth, const Grid& grid) {
    params.validate();
    if (depth < 0) throw DomainError("hankel: depth must be non-negative");
    const int size = params.m + 1;
    CheckReport report;
    report.check_id = "hankel";
    report.params = {{"n", params.n},
                     {"j", params.j},
                     {"m", params.m},
                     {"order", size},
                     {"depth", depth},
                     {"grid", detail::grid_json(grid)}};
    const Real sign = detail::sign_pow((params.n + 1) * size);

    std::vector<std::vector<std::vector<int>>> shifts(depth + 1);
    for (int k = 0; k <= depth; ++k) {
        std::vector<int> current;
        compositions(k, size, current, shifts[k]);
    }
    double max_condition = 0;
    for (double y : grid.points()) {
        for (int k = 0; k <= depth; ++k) {
            // d^k det = sum over row-derivative distributions, weighted by multinomial coefficients
            Real value = 0;
            Real error = 0;
            Real mass = 0;
            for (const auto& shift : shifts[k]) {
                if (repeats_row(shift, params.j)) continue;
                Real coeff = specfun::factorial(k);
                for (int s : shift) coeff /= specfun::factorial(s);
                double cond = 0;
                const EvalResult d = hankel_determinant(params, shift, y, &cond);
                max_condition = std::max(max_condition, cond);
                value += coeff * d.value;
                error += coeff * d.error;
                mass += coeff * std::fabs(d.value);
            }
            error += 4 * kEpsilon * mass;
            const Real lhs = sign * detail::sign_pow(k) * value;
            detail::record(report, detail::make_witness({y}, lhs, 0, lhs, error, "k=" + std::to_string(k)),
                           detail::Relation::Strict);
        }
    }
    report.metrics["max_condition"] = max_condition;
    detail::finalize(report);
    return report;
}

}  // namespace polydg::verify
