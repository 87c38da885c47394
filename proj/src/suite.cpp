#include <functional>
#include <future>

#include "detail.hpp"

namespace polydg::verify {

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = {"cm",       "turan",         "ratio",       "F-cm",   "F-gap",
                                                 "lemma-I1", "subadditivity", "G-convexity", "hankel", "cauchy-schwarz"};
    return ids;
}

std::vector<CheckReport> run_suite(const SuiteOptions& options) {
    using Task = std::function<CheckReport()>;
    std::vector<Task> tasks;
    const Grid grid = options.grid;
    const int depth = options.depth;

    for (int n = 2; n <= 6; ++n) tasks.push_back([=] { return check_cm(n, depth, grid); });
    for (int n = 2; n <= 6; ++n) tasks.push_back([=] { return check_turan(n, grid); });
    const Grid wide = Grid::logarithmic(0.05, 1e4, 200);
    for (int n = 3; n <= 6; ++n) tasks.push_back([=] { return check_ratio_bounds(n, wide); });
    for (int n = 3; n <= 5; ++n) {
        const double lower = static_cast<double>(n - 2) / (n - 1);
        const double upper = static_cast<double>(n) / (n + 1);
        tasks.push_back([=] { return check_F_cm(FParams{n, lower, depth}, grid); });
        tasks.push_back([=] { return check_F_cm(FParams{n, upper, depth}, grid); });
    }
    for (int n = 3; n <= 5; ++n) tasks.push_back([=] { return check_F_gap(n, depth, grid); });
    const Grid band = Grid::linear(1.01, 1.99, 100);
    const Grid spots = Grid::at({0.1, 5, 20});
    for (int n = 3; n <= 4; ++n) {
        tasks.push_back([=] { return check_lemma_I1(n, band, options.tol); });
        tasks.push_back([=] { return check_lemma_I1(n, spots, options.tol); });
    }
    for (int n = 2; n <= 3; ++n) {
        for (int r = 0; r <= 2; ++r) {
            tasks.push_back([=] { return check_subadditivity(SubAddParams{n, r, 2, options.samples, options.seed}); });
        }
    }
    for (int n = 3; n <= 6; ++n) {
        const double rs[] = {-1.0, -1.5 / (n - 1), -0.5 / (n + 1), 0.5, 1.0, 2.0};
        for (double r : rs) {
            tasks.push_back([=] { return check_G_convexity(GParams{n, r}, grid, 50, options.seed); });
        }
        const double gap = -(1.0 / (n - 1) + 1.0 / (n + 1)) / 2;
        tasks.push_back([=] { return check_G_convexity(GParams{n, gap}, grid, 0, options.seed); });
    }
    for (int n = 2; n <= 3; ++n) {
        for (int j = 1; j <= 2; ++j) {
            for (int m = 1; m <= 3; ++m) {
                tasks.push_back([=] { return check_hankel_cm(HankelParams{n, j, m}, 1, grid); });
            }
        }
    }
    for (int n = 3; n <= 6; ++n) tasks.push_back([=] { return check_cauchy_schwarz(n, grid); });

    std::vector<std::future<CheckReport>> futures;
    futures.reserve(tasks.size());
    for (auto& task : tasks) futures.push_back(std::async(std::launch::async, task));
    std::vector<CheckReport> reports;
    reports.reserve(futures.size());
    for (auto& f : futures) reports.push_back(f.get());
    return reports;
}

}  // namespace polydg::verify
