#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polydg/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "polydg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = polydg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval") {
    const Run r = run({"eval", "--n", "2", "--x", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("-3.2898681336964528") != std::string::npos);
    const Run j = run({"--format", "json", "eval", "--n", "3", "--x", "1", "--method", "integral"});
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("value").get<double>() == doctest::Approx(7.2123414189575657));
    CHECK(doc.at("n") == 3);
    const Run d = run({"--format", "csv", "eval", "--psi2", "--x", "1"});
    CHECK(d.code == 0);
    CHECK(d.out.rfind("n,x,value,error,method\npsi2,1,1.158277131696860", 0) == 0);
}

TEST_CASE("usage and domain errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"eval", "--x", "1"}).code == 2);
    CHECK(run({"eval", "--n", "1", "--x", "1"}).code == 2);
    CHECK(run({"eval", "--n", "2", "--x", "-1"}).code == 2);
    CHECK(run({"eval", "--n", "2", "--x", "1", "--method", "simpson"}).code == 2);
    CHECK(run({"check", "--id", "nonsense"}).code == 2);
    CHECK(run({"check"}).code == 2);
    CHECK(run({"check", "--id", "hankel", "--m", "5"}).code == 2);
    CHECK(run({"figure", "--id", "7"}).code == 2);
    CHECK(run({"--format", "xml", "audit"}).code == 2);
    const Run bad = run({"frobnicate"});
    CHECK(bad.code == 2);
    CHECK(!bad.err.empty());
}

TEST_CASE("help exits with 0") {
    const Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("eval") != std::string::npos);
    CHECK(run({"check", "--help"}).code == 0);
}

TEST_CASE("single checks") {
    const Run ok = run({"check", "--id", "cm", "--n", "3", "--grid-count", "20"});
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("PASS cm", 0) == 0);
    const Run gap = run({"--format", "json", "check", "--id", "F-cm", "--n", "3", "--omega", "0.625", "--depth", "3"});
    CHECK(gap.code == 1);
    const auto doc = nlohmann::json::parse(gap.out);
    CHECK(doc.at("passed") == false);
    CHECK(!doc.at("counterexamples").empty());
    const Run csv = run({"--format", "csv", "check", "--id", "turan", "--grid-count", "5"});
    CHECK(csv.code == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 6);
}

TEST_CASE("audit") {
    const Run r = run({"--format", "json", "audit"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).size() == 13);
}

TEST_CASE("figure output file") {
    const auto path = std::filesystem::temp_directory_path() / "polydg_fig3_test.csv";
    const Run r = run({"--out", path.string(), "figure", "--id", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(std::filesystem::file_size(path) > 0);
    std::filesystem::remove(path);
    CHECK(run({"--out", "/nonexistent-dir/x.csv", "figure", "--id", "1"}).code == 2);
}

TEST_CASE("limit table") {
    const Run r = run({"--format", "csv", "limit", "--n", "3", "--count", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("x,scaled,deviation\n", 0) == 0);
    CHECK(run({"limit", "--n", "1"}).code == 2);
}

}
