#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "polydg/core.hpp"

namespace polydg::figures {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Data behind plot `id` (1..6); throws DomainError for other ids.
///   1: x, d0..d5 = psi_2^{(3)}..psi_2^{(8)} on 400 points of (0.05, 4]
///   2: x, (psi_2^{(2)}(x+1))^2, psi_2^{(2)}(x) psi_2^{(2)}(x+2) on the same points
///   3: x, x psi_2^{(2)}(x) on 200 log-spaced points of [1, 40000]
///   4: a, I_1(a; 3), I_1(a; 4) on 100 points of [1.01, 1.99]
///   5: x, F_3(x; 1/4) and its first four derivatives
///   6: x, -F_3(x; 3/4) and its first four derivatives
Table figure_table(int id);

/// Comma-separated, header first, every number with 17 significant digits, independent of locale.
void write_csv(std::ostream& out, const Table& table);

std::string format_number(double v);

}  // namespace polydg::figures
