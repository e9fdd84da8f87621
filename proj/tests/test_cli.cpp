#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ellipt/cli.hpp"

using ellipt::run_cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("number format") {
    CHECK(ellipt::format_number(1.0) == "1.0000000000000000e+00");
    CHECK(ellipt::format_number(-0.125) == "-1.2500000000000000e-01");
    CHECK(std::stod(ellipt::format_number(0.1)) == 0.1);
}

TEST_CASE("eval") {
    const Run r = run({"eval", "--u", "0.5", "--m-re", "0"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["K"]["re"].get<double>() - M_PI / 2) < 1e-15);
    CHECK(std::abs(j["sn"]["re"].get<double>() - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(j["sigma"].get<double>() - std::sqrt(0.5)) < 1e-15);

    const Run cut = run({"eval", "--u", "0.7", "--m-re", "1.3", "--side", "below"});
    REQUIRE(cut.code == 0);
    const json c = json::parse(cut.out);
    CHECK(c["side"] == "below");
    CHECK(c["sn"]["im"].get<double>() < 0.0);

    const Run one = run({"eval", "--u", "0.3", "--m-re", "1"});
    REQUIRE(one.code == 0);
    CHECK(json::parse(one.out)["sigma"].get<double>() == 1.0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"eval", "--u", "1.5"}).code == 2);
    CHECK(run({"eval", "--u", "0.5", "--m-re", "0.5", "--side", "above"}).code == 2);
    CHECK(run({"eval", "--u", "0.5", "--m-re", "1.5", "--side", "left"}).code == 2);
    CHECK(run({"region", "--u", "0.7", "--window", "1,0,0,1"}).code == 2);
    CHECK(run({"region", "--u", "0.7", "--window", "a,b"}).code == 2);
    CHECK(run({"verify", "--suite", "nothing"}).code == 2);
    CHECK(run({"spectral", "--k-re", "1"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("global-max") {
    const Run r = run({"global-max", "--refine", "1e-6"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["sigma_star"].get<double>() - 1.01038) < 1e-3);
    CHECK(std::abs(j["u_star"].get<double>() - 0.69098) < 5e-3);
    CHECK(std::abs(j["m_star"].get<double>() - 1.11015) < 5e-3);
}

TEST_CASE("region writes grid and contour files") {
    const auto dir = std::filesystem::temp_directory_path() / "ellipt_cli_test";
    std::filesystem::create_directories(dir);
    const std::string grid = (dir / "r04.csv").string();
    const Run r = run({"region", "--u", "0.4", "--step", "0.05", "--out", grid});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["polylines"] == 0);
    CHECK(j["nodes"] == 61 * 61);
    std::ifstream g(grid);
    std::stringstream gs;
    gs << g.rdbuf();
    const auto rows = lines(gs.str());
    CHECK(rows.front() == "re_m,im_m,sigma");
    CHECK(rows.size() == 61 * 61 + 1);
    std::ifstream c((dir / "r04.contour.csv").string());
    std::string header;
    std::getline(c, header);
    CHECK(header == "polyline_id,vertex_index,re_m,im_m");

    // stdout form: grid, blank line, contour
    const Run s = run({"region", "--u", "0.8", "--step", "0.05"});
    REQUIRE(s.code == 0);
    const auto all = lines(s.out);
    const auto blank = std::find(all.begin(), all.end(), "");
    REQUIRE(blank != all.end());
    CHECK(blank - all.begin() == 61 * 61 + 1);
    CHECK(*(blank + 1) == "polyline_id,vertex_index,re_m,im_m");
    CHECK(all.end() - blank > 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("maxima and profile tables") {
    const Run m = run({"maxima", "--u-min", "0.3", "--u-max", "0.7", "--u-step", "0.2"});
    REQUIRE(m.code == 0);
    const auto rows = lines(m.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "u,m_tilde,m_star,sigma_star");
    CHECK(rows[1].find(",nan,") != std::string::npos);
    CHECK(rows[3].find("nan") == std::string::npos);

    const Run p = run({"profile", "--u", "0.7", "--step", "0.25"});
    REQUIRE(p.code == 0);
    CHECK(lines(p.out).size() == 6);
}

TEST_CASE("verify and spectral") {
    const Run v = run({"verify", "--suite", "identities"});
    CHECK(v.code == 0);
    const json j = json::parse(v.out);
    CHECK(j["suite"] == "identities");
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() >= 7);
    for (const auto& c : j["checks"]) CHECK(c["pass"] == true);

    const Run s = run({"spectral", "--n-max", "10"});
    REQUIRE(s.code == 0);
    const json sj = json::parse(s.out);
    CHECK(sj["v"].size() == 10);
    CHECK(sj["residuals"].size() == 9);
    CHECK(sj["max_interior_residual"].get<double>() < 1e-10);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args = {"maxima", "--u-min", "0.55", "--u-max", "0.95", "--u-step", "0.1"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> reg = {"region", "--u", "0.75", "--step", "0.05"};
    CHECK(run(reg).out == run(reg).out);
}
