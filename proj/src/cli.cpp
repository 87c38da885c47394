#include "polydg/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polydg/figures.hpp"
#include "polydg/polydg.hpp"
#include "polydg/report.hpp"
#include "polydg/verify.hpp"

namespace polydg::cli {

namespace {

using figures::format_number;
using verify::CheckReport;
using verify::Grid;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    double tol = 1e-12;
    std::string format = "human";
    std::string out_path;
    std::uint64_t seed = 0;
};

struct EvalOpts {
    std::optional<int> n;
    bool psi2 = false;
    double x = 0;
    std::string method = "auto";
};

struct CheckOpts {
    std::string suite;
    std::string id;
    std::optional<int> n;
    std::optional<double> omega;
    std::optional<double> r;
    std::optional<double> m;
    std::optional<int> j;
    std::optional<int> depth;
    std::optional<double> grid_lo;
    std::optional<double> grid_hi;
    std::optional<int> grid_count;
    std::optional<std::string> spacing;
    std::optional<int> samples;
};

struct FigureOpts {
    int id = 0;
};

struct LimitOpts {
    int n = 2;
    double x_max = 40000;
    int count = 20;
};

std::string num(Real v) { return format_number(static_cast<double>(v)); }

Grid grid_from(const CheckOpts& o, Grid fallback) {
    if (!o.grid_lo && !o.grid_hi && !o.grid_count && !o.spacing) return fallback;
    Grid g = fallback;
    if (g.spacing == verify::Spacing::Explicit) g = Grid{};
    if (o.grid_lo) g.lo = *o.grid_lo;
    if (o.grid_hi) g.hi = *o.grid_hi;
    if (o.grid_count) g.count = *o.grid_count;
    if (o.spacing) g.spacing = *o.spacing == "linear" ? verify::Spacing::Linear : verify::Spacing::Logarithmic;
    g.validate();
    return g;
}

CheckReport run_single(const CheckOpts& o, const Globals& g) {
    const std::string& id = o.id;
    const Grid standard = Grid::logarithmic(0.05, 50, 200);
    if (id == "cm") return verify::check_cm(o.n.value_or(2), o.depth.value_or(6), grid_from(o, standard));
    if (id == "turan") return verify::check_turan(o.n.value_or(2), grid_from(o, standard));
    if (id == "ratio") return verify::check_ratio_bounds(o.n.value_or(3), grid_from(o, Grid::logarithmic(0.05, 1e4, 200)));
    if (id == "F-cm") {
        return verify::check_F_cm(verify::FParams{o.n.value_or(3), o.omega.value_or(0.25), o.depth.value_or(6)},
                                  grid_from(o, standard));
    }
    if (id == "F-gap") return verify::check_F_gap(o.n.value_or(3), o.depth.value_or(6), grid_from(o, standard));
    if (id == "lemma-I1") return verify::check_lemma_I1(o.n.value_or(3), grid_from(o, Grid::linear(1.01, 1.99, 100)), g.tol);
    if (id == "subadditivity") {
        const double r = o.r.value_or(0);
        if (r < 0 || r != std::floor(r)) throw DomainError("subadditivity: --r must be a non-negative integer");
        return verify::check_subadditivity(
            verify::SubAddParams{o.n.value_or(2), static_cast<int>(r), o.m.value_or(2), o.samples.value_or(200), g.seed});
    }
    if (id == "G-convexity") {
        return verify::check_G_convexity(verify::GParams{o.n.value_or(3), o.r.value_or(1)}, grid_from(o, standard),
                                         o.samples.value_or(50), g.seed);
    }
    if (id == "hankel") {
        const double m = o.m.value_or(1);
        if (m != std::floor(m)) throw DomainError("hankel: --m must be an integer");
        return verify::check_hankel_cm(verify::HankelParams{o.n.value_or(2), o.j.value_or(1), static_cast<int>(m)},
                                       o.depth.value_or(1), grid_from(o, standard));
    }
    if (id == "cauchy-schwarz") return verify::check_cauchy_schwarz(o.n.value_or(3), grid_from(o, standard));
    throw UsageError("unknown check id '" + id + "'");
}

void print_witness(std::ostream& out, const verify::Witness& w) {
    out << "    ";
    for (std::size_t i = 0; i < w.point.size(); ++i) out << (i ? "," : "(") << format_number(w.point[i]);
    out << (w.point.empty() ? "" : ") ") << w.label << ": lhs=" << format_number(w.lhs)
        << " rhs=" << format_number(w.rhs) << " margin=" << format_number(w.margin)
        << " err=" << format_number(w.error) << '\n';
}

void render_human(std::ostream& out, const std::vector<CheckReport>& reports, bool detailed) {
    std::size_t passed = 0;
    for (const auto& r : reports) {
        passed += r.passed ? 1 : 0;
        out << (r.passed ? "PASS " : "FAIL ") << r.check_id << ' ' << r.params.dump() << '\n';
        out << "  witnesses=" << r.witnesses.size() << " counterexamples=" << r.counterexamples.size()
            << " inconclusive=" << r.inconclusive.size() << " tolerance=" << format_number(r.tolerance_used) << '\n';
        for (const auto& [k, v] : r.metrics) out << "  " << k << " = " << format_number(v) << '\n';
        if (detailed) {
            for (const auto& w : r.witnesses) print_witness(out, w);
        } else {
            for (std::size_t i = 0; i < r.counterexamples.size() && i < 5; ++i) print_witness(out, r.counterexamples[i]);
        }
    }
    out << passed << " of " << reports.size() << " checks passed";
    if (!reports.empty()) out << " (" << reports.front().note << ")";
    out << '\n';
}

void render_csv(std::ostream& out, const std::vector<CheckReport>& reports) {
    out << "check_id,params,label,point,lhs,rhs,margin,error,status\n";
    for (const auto& r : reports) {
        std::string params = r.params.dump();
        std::string quoted = "\"";
        for (char c : params) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        quoted += "\"";
        for (const auto& w : r.witnesses) {
            std::string point;
            for (std::size_t i = 0; i < w.point.size(); ++i) point += (i ? ";" : "") + format_number(w.point[i]);
            const bool bad = std::find(r.counterexamples.begin(), r.counterexamples.end(), w) != r.counterexamples.end();
            out << r.check_id << ',' << quoted << ',' << '"' << w.label << '"' << ',' << point << ','
                << format_number(w.lhs) << ',' << format_number(w.rhs) << ',' << format_number(w.margin) << ','
                << format_number(w.error) << ',' << (bad ? "counterexample" : "ok") << '\n';
        }
    }
}

int do_eval(const EvalOpts& o, const Globals& g, std::ostream& out) {
    Precision prec;
    prec.abs_tol = g.tol;
    EvalResult r;
    std::string label;
    if (o.psi2) {
        if (o.n) throw UsageError("eval: use either --n or --psi2");
        r = psi2_didouble(o.x, prec);
        label = "psi_2(" + num(o.x) + ")";
    } else {
        if (!o.n) throw UsageError("eval: --n or --psi2 is required");
        r = psi2_eval(PolyDoubleArg{*o.n, o.x}, parse_method(o.method), prec);
        label = "psi_2^(" + std::to_string(*o.n) + ")(" + num(o.x) + ")";
    }
    if (g.format == "json") {
        nlohmann::json j = eval_json(r);
        j["x"] = o.x;
        if (o.n) j["n"] = *o.n;
        else j["n"] = "psi2";
        out << j.dump(2) << '\n';
    } else if (g.format == "csv") {
        out << "n,x,value,error,method\n"
            << (o.n ? std::to_string(*o.n) : std::string("psi2")) << ',' << format_number(o.x) << ','
            << num(r.value) << ',' << num(r.error) << ',' << r.method << '\n';
    } else {
        std::ostringstream value;
        value << std::setprecision(20) << r.value;
        out << label << " = " << value.str() << "\n  error estimate " << num(r.error) << "\n  method " << r.method
            << '\n';
    }
    return kExitOk;
}

int do_check(const CheckOpts& o, const Globals& g, std::ostream& out) {
    if (o.suite.empty() == o.id.empty()) throw UsageError("check: give exactly one of --suite or --id");
    std::vector<CheckReport> reports;
    if (!o.suite.empty()) {
        if (o.suite != "all") throw UsageError("check: unknown suite '" + o.suite + "'");
        verify::SuiteOptions opts;
        opts.seed = g.seed;
        opts.tol = g.tol;
        if (o.depth) opts.depth = *o.depth;
        if (o.samples) opts.samples = *o.samples;
        opts.grid = grid_from(o, opts.grid);
        reports = verify::run_suite(opts);
    } else {
        reports.push_back(run_single(o, g));
    }
    if (g.format == "json") {
        const nlohmann::json j = o.id.empty() ? nlohmann::json(reports) : nlohmann::json(reports.front());
        out << j.dump(2) << '\n';
    } else if (g.format == "csv") {
        render_csv(out, reports);
    } else {
        render_human(out, reports, !o.id.empty());
    }
    for (const auto& r : reports) {
        if (!r.passed) return kExitCounterexample;
    }
    return kExitOk;
}

int do_audit(const Globals& g, std::ostream& out) {
    Precision prec;
    prec.abs_tol = g.tol;
    const auto entries = verify::audit_identities(prec);
    if (g.format == "json") {
        out << nlohmann::json(entries).dump(2) << '\n';
        return kExitOk;
    }
    if (g.format == "csv") {
        out << "identity_id,status,max_deviation,error_estimate\n";
        for (const auto& e : entries) {
            out << e.identity_id << ',' << e.status << ',' << format_number(e.max_deviation) << ','
                << format_number(e.error_estimate) << '\n';
        }
        return kExitOk;
    }
    std::size_t confirmed = 0;
    for (const auto& e : entries) {
        confirmed += e.status == "confirmed";
        out << std::left << std::setw(34) << e.identity_id << std::setw(12) << e.status
            << "deviation=" << format_number(e.max_deviation) << " error=" << format_number(e.error_estimate) << '\n'
            << "    " << e.formula << '\n'
            << "    " << e.note << '\n';
    }
    out << confirmed << " confirmed, " << entries.size() - confirmed << " discrepancies\n";
    return kExitOk;
}

int do_figure(const FigureOpts& o, const Globals& g, std::ostream& out) {
    if (o.id < 1 || o.id > 6) throw UsageError("figure: --id must be between 1 and 6");
    if (g.format != "human" && g.format != "csv") throw UsageError("figure: output is always csv");
    const auto table = figures::figure_table(o.id);
    figures::write_csv(out, table);
    return kExitOk;
}

int do_limit(const LimitOpts& o, const Globals& g, std::ostream& out) {
    if (o.n < 2) throw DomainError("limit: n must be at least 2");
    if (!(o.x_max > 1)) throw DomainError("limit: --x-max must exceed 1");
    if (o.count < 2) throw DomainError("limit: --count must be at least 2");
    const double target = (o.n % 2 == 0 ? -1 : 1) * static_cast<double>(specfun::factorial(o.n - 2));
    const auto pts = Grid::logarithmic(1, o.x_max, o.count).points();
    std::vector<std::pair<double, double>> rows;
    for (double x : pts) {
        const EvalResult r = psi2(o.n, x);
        rows.emplace_back(x, static_cast<double>(std::pow(static_cast<Real>(x), o.n - 1) * r.value));
    }
    if (g.format == "json") {
        nlohmann::json j = {{"n", o.n}, {"limit", target}, {"rows", nlohmann::json::array()}};
        for (const auto& [x, v] : rows) j["rows"].push_back({{"x", x}, {"scaled", v}, {"deviation", v - target}});
        out << j.dump(2) << '\n';
    } else if (g.format == "csv") {
        out << "x,scaled,deviation\n";
        for (const auto& [x, v] : rows) out << format_number(x) << ',' << format_number(v) << ',' << format_number(v - target) << '\n';
    } else {
        out << "x^(n-1) psi_2^(n)(x) for n = " << o.n << ", limit " << format_number(target) << '\n';
        for (const auto& [x, v] : rows) {
            out << "  x=" << format_number(x) << "  value=" << format_number(v)
                << "  deviation=" << format_number(v - target) << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Poly-double gamma evaluation, inequality checks and identity audit", "polydg"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_option("--tol", g.tol, "target absolute error")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--out", g.out_path, "write output to this file instead of stdout");
    app.add_option("--seed", g.seed, "seed for sampled pairs");

    EvalOpts eo;
    auto* eval = app.add_subcommand("eval", "evaluate psi_2^(n)(x) or psi_2(x)");
    eval->add_option("--n", eo.n, "derivative order n >= 2");
    eval->add_flag("--psi2", eo.psi2, "evaluate the di-double gamma function");
    eval->add_option("--x", eo.x, "argument x > 0")->required();
    eval->add_option("--method", eo.method, "series | polygamma | integral | asymptotic | auto")
        ->check(CLI::IsMember({"series", "polygamma", "integral", "asymptotic", "auto"}));

    CheckOpts co;
    auto* check = app.add_subcommand("check", "run inequality checks");
    check->add_option("--suite", co.suite, "named suite (all)");
    check->add_option("--id", co.id, "single check id")->check(CLI::IsMember(verify::check_ids()));
    check->add_option("--n", co.n);
    check->add_option("--omega", co.omega);
    check->add_option("--r", co.r);
    check->add_option("--m", co.m);
    check->add_option("--j", co.j);
    check->add_option("--depth", co.depth);
    check->add_option("--grid-lo", co.grid_lo);
    check->add_option("--grid-hi", co.grid_hi);
    check->add_option("--grid-count", co.grid_count);
    check->add_option("--spacing", co.spacing)->check(CLI::IsMember({"linear", "log"}));
    check->add_option("--samples", co.samples);

    auto* audit = app.add_subcommand("audit", "compare stated representations with the series definition");

    FigureOpts fo;
    auto* figure = app.add_subcommand("figure", "write plot data as csv");
    figure->add_option("--id", fo.id, "figure number 1..6")->required();

    LimitOpts lo;
    auto* limit = app.add_subcommand("limit", "tabulate x^(n-1) psi_2^(n)(x) towards its limit");
    limit->add_option("--n", lo.n);
    limit->add_option("--x-max", lo.x_max);
    limit->add_option("--count", lo.count);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return kExitUsage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!g.out_path.empty()) {
        file.open(g.out_path, std::ios::out | std::ios::trunc);
        if (!file) {
            err << "error: cannot write to '" << g.out_path << "'\n";
            return kExitUsage;
        }
        sink = &file;
    }

    try {
        int code = kExitOk;
        if (*eval) code = do_eval(eo, g, *sink);
        else if (*check) code = do_check(co, g, *sink);
        else if (*audit) code = do_audit(g, *sink);
        else if (*figure) code = do_figure(fo, g, *sink);
        else if (*limit) code = do_limit(lo, g, *sink);
        if (file.is_open()) {
            file.flush();
            if (!file) {
                err << "error: failed writing '" << g.out_path << "'\n";
                return kExitUsage;
            }
        }
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RangeError& e) {
        err << "range error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConvergenceError& e) {
        err << "no convergence: " << e.what() << " (best estimate " << num(e.best_value()) << ")\n";
        return kExitUsage;
    }
}

}  // namespace polydg::cli
