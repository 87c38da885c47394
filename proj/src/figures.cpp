#include "polydg/figures.hpp"

#include <array>
#include <charconv>

#include "detail.hpp"

namespace polydg::figures {

namespace {

// count points of (lo, hi], excluding lo
std::vector<double> open_linear(double lo, double hi, int count) {
    std::vector<double> pts;
    for (int i = 1; i <= count; ++i) pts.push_back(lo + (hi - lo) * i / count);
    pts.back() = hi;
    return pts;
}

Table F_table(double omega, double sign) {
    Table t{{"x", "F", "dF1", "dF2", "dF3", "dF4"}, {}};
    for (double x : open_linear(0.05, 4, 400)) {
        std::vector<double> row{x};
        for (int k = 0; k <= 4; ++k) {
            row.push_back(sign * static_cast<double>(verify::F_derivative(3, omega, k, x).value));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace

std::string format_number(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

Table figure_table(int id) {
    switch (id) {
        case 1: {
            Table t{{"x", "d0", "d1", "d2", "d3", "d4", "d5"}, {}};
            for (double x : open_linear(0.05, 4, 400)) {
                std::vector<double> row{x};
                for (int k = 0; k <= 5; ++k) row.push_back(static_cast<double>(psi2(3 + k, x).value));
                t.rows.push_back(std::move(row));
            }
            return t;
        }
        case 2: {
            Table t{{"x", "lhs", "rhs"}, {}};
            for (double x : open_linear(0.05, 4, 400)) {
                const Real mid = psi2(2, x + 1).value;
                const Real rhs = psi2(2, x).value * psi2(2, x + 2).value;
                t.rows.push_back({x, static_cast<double>(mid * mid), static_cast<double>(rhs)});
            }
            return t;
        }
        case 3: {
            Table t{{"x", "x_psi2"}, {}};
            for (double x : verify::Grid::logarithmic(1, 40000, 200).points()) {
                t.rows.push_back({x, static_cast<double>(x * psi2(2, x).value)});
            }
            return t;
        }
        case 4: {
            Table t{{"a", "I1_n3", "I1_n4"}, {}};
            for (double a : verify::Grid::linear(1.01, 1.99, 100).points()) {
                t.rows.push_back({a, static_cast<double>(verify::lemma_I1(3, a, 1e-12L).value),
                                  static_cast<double>(verify::lemma_I1(4, a, 1e-12L).value)});
            }
            return t;
        }
        case 5: return F_table(0.25, 1);
        case 6: return F_table(0.75, -1);
        default: throw DomainError("figure id must be between 1 and 6");
    }
}

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
        out << '\n';
    }
}

}  // namespace polydg::figures
