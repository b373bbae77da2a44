#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pctk/cli.hpp"
#include "pctk/errors.hpp"

using namespace pctk;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& text) {
    std::size_t count = 0;
    for (const char ch : text)
        if (ch == '\n') ++count;
    return count;
}

}  // namespace

TEST_CASE("grid parsing") {
    CHECK(parse_value_grid("2:9:1") ==
          std::vector<double>{2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(parse_value_grid("4,6,12") == std::vector<double>{4, 6, 12});
    CHECK(parse_value_grid("2.5") == std::vector<double>{2.5});
    CHECK(parse_value_grid("1:2:0.25") == std::vector<double>{1, 1.25, 1.5, 1.75, 2});
    CHECK(parse_order_grid("3:12:1").size() == 10);
    CHECK(parse_order_grid("4,6,12") == std::vector<int>{4, 6, 12});
    CHECK_THROWS_AS(parse_value_grid("2:9"), PcError);
    CHECK_THROWS_AS(parse_value_grid("9:2:1"), PcError);
    CHECK_THROWS_AS(parse_value_grid("a,b"), PcError);
    CHECK_THROWS_AS(parse_order_grid("1:5:0"), PcError);
}

TEST_CASE("gen emits the expected CSV and is byte-deterministic") {
    const CliResult first = cli({"gen", "--kind", "lpc", "--x", "2", "--n", "5"});
    CHECK(first.code == 0);
    CHECK(first.out.substr(0, first.out.find('\n')) == "1,2,0.5,2,0.5");
    CHECK(count_lines(first.out) == 5);
    const CliResult second = cli({"gen", "--kind", "lpc", "--x", "2", "--n", "5"});
    CHECK(second.out == first.out);

    const CliResult json_form =
        cli({"gen", "--kind", "fpc", "--x", "2.25", "--n", "4", "--format", "json"});
    CHECK(json_form.code == 0);
    const auto j = nlohmann::json::parse(json_form.out);
    CHECK(j["n"] == 4);
    CHECK(j["entries"][0][1] == 2.25);
}

TEST_CASE("gen to file, analyze round-trips through the report") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "pctk_cli_test";
    fs::create_directories(dir);
    const std::string path = (dir / "cpc.csv").string();

    CHECK(cli({"gen", "--kind", "cpc", "--x", "2", "--n", "4", "--out", path}).code == 0);

    const CliResult from_file = cli({"analyze", "--input", path});
    CHECK(from_file.code == 0);
    const auto j_file = nlohmann::json::parse(from_file.out);

    const CliResult from_spec = cli({"analyze", "--kind", "cpc", "--x", "2", "--n", "4"});
    CHECK(from_spec.code == 0);
    const auto j_spec = nlohmann::json::parse(from_spec.out);

    for (const char* key : {"lambda_max", "ci", "kii", "ci_upper"})
        CHECK(std::abs(j_file[key].get<double>() - j_spec[key].get<double>()) <= 1e-9);
    CHECK(j_spec["ci"].get<double>() == doctest::Approx(0.020215675851381).epsilon(1e-9));
    fs::remove_all(dir);
}

TEST_CASE("sweep default grid reproduces the 24-row table") {
    const CliResult res = cli({"sweep"});
    CHECK(res.code == 0);
    CHECK(count_lines(res.out) == 25);  // header + 8 x-values * 3 orders
    CHECK(res.out.find("2,4,3,4.5,4.6,") != std::string::npos);
    CHECK(res.out.rfind("x,n,r,R,one_plus_H,lambda_max,one_plus_G,", 0) == 0);

    const CliResult strict = cli({"sweep", "--strict"});
    CHECK(strict.code == 0);  // no conjecture violations on the default grid
    CHECK(strict.err.empty());
}

TEST_CASE("sweep json mirror") {
    const CliResult res = cli({"sweep", "--x", "2", "--n", "4", "--format", "json"});
    CHECK(res.code == 0);
    const auto j = nlohmann::json::parse(res.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["n"] == 4);
    CHECK(j[0]["one_plus_H"].get<double>() == doctest::Approx(4.6));
}

TEST_CASE("verify passes on a reduced grid") {
    const CliResult res = cli({"verify", "--x", "1.5,2", "--n", "3:6:1"});
    CHECK(res.code == 0);
    CHECK(res.out.find("PASS closed_form_vs_oracle") != std::string::npos);
    CHECK(res.out.find("PASS cpc_cubic_residual") != std::string::npos);
    CHECK(res.out.find("all checks passed") != std::string::npos);
    CHECK(res.out.find("FAIL") == std::string::npos);
}

TEST_CASE("discs emits the five-marker picture for the odd layer-cake") {
    const CliResult res = cli({"discs", "--kind", "lpc", "--x", "2", "--n", "5"});
    CHECK(res.code == 0);
    std::size_t outlines = 0, markers = 0, pos = 0;
    while ((pos = res.out.find("fill=\"none\"", pos)) != std::string::npos) {
        ++outlines;
        pos += 10;
    }
    pos = 0;
    while ((pos = res.out.find("fill=\"#d62728\"", pos)) != std::string::npos) {
        ++markers;
        pos += 10;
    }
    CHECK(outlines == 1);
    CHECK(markers == 5);
}

TEST_CASE("discs falls back to the oracle marker without a closed spectrum") {
    const CliResult res = cli({"discs", "--kind", "lpc", "--x", "2", "--n", "4"});
    CHECK(res.code == 0);
    std::size_t markers = 0, pos = 0;
    while ((pos = res.out.find("fill=\"#d62728\"", pos)) != std::string::npos) {
        ++markers;
        pos += 10;
    }
    CHECK(markers == 1);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"gen"}).code == 2);                                       // --kind required
    CHECK(cli({"gen", "--kind", "nope", "--n", "4"}).code == 2);
    CHECK(cli({"gen", "--kind", "lpc", "--x", "1", "--n", "5"}).code == 2);  // degenerate x
    CHECK(cli({"gen", "--kind", "ckpc", "--x", "2", "--n", "5", "--k", "3"}).code == 2);
    CHECK(cli({"analyze"}).code == 2);  // needs --input or --kind
    CHECK(cli({"analyze", "--input", "/nonexistent/m.csv", "--kind", "cc"}).code == 2);
    CHECK(cli({"analyze", "--input", "/nonexistent/m.csv"}).code == 2);
    CHECK(cli({"sweep", "--x", "bad"}).code == 2);
    CHECK(cli({"sweep", "--n", "5"}).code == 2);  // odd order in the even study
    const CliResult err_msg = cli({"gen", "--kind", "lpc", "--x", "1", "--n", "5"});
    CHECK(err_msg.err.find("DegenerateX") != std::string::npos);
}

TEST_CASE("help exits zero") {
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"gen", "--help"}).code == 0);
}
