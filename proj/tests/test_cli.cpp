#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "unitroot/residue.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = "/tmp/unitroot_cli_test_out.txt";
    const std::string cmd =
        std::string(UNITROOT_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(status), ss.str()};
}

const std::string kGenus2 =
    "--poly \"y^2 - x^5 - 2*x^2 - x - 1\" --vars x,y";

} // namespace

TEST_CASE("interior-points: genus-2 fixture") {
    const RunResult r = run_cli("interior-points " + kGenus2 + " --format json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("h") == 2);
    CHECK(doc.at("J") == json::parse("[[1,1],[2,1]]"));
}

TEST_CASE("interior-points: monomial warns about the empty index set") {
    const RunResult r = run_cli("interior-points --poly \"x*y\" --vars x,y --format json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("h") == 0);
    CHECK(doc.at("warning") == "no interior points");
}

TEST_CASE("interior-points: generic plane quartic has h = 3") {
    const RunResult r = run_cli(
        "interior-points --poly \"x^4 + y^4 + z^4 + x*y*z^2 + x^2*y^2 + x^2*y*z\" "
        "--vars x,y,z --format json");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("h") == 3);
}

TEST_CASE("limit: precision 2 digits in json mode") {
    const RunResult r =
        run_cli("limit " + kGenus2 + " --prime 11 --precision 2 --format json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("trace").at("digits") == "8 + 11 + O(11^2)");
    CHECK(doc.at("det").at("digits") == "7 + 6*11 + O(11^2)");
    // digit strings round-trip through the parser
    const auto tr = unitroot::parse_padic_string(doc.at("trace").at("digits"));
    CHECK(tr.value() == 8 + 11);
    // left and right sides have the same charpoly
    const RunResult l =
        run_cli("limit " + kGenus2 + " --prime 11 --precision 2 --side left --format json");
    CHECK(l.exit_code == 0);
    CHECK(json::parse(l.out).at("charpoly") == doc.at("charpoly"));
}

TEST_CASE("limit: guard digits cross-check") {
    const RunResult r = run_cli(
        "limit " + kGenus2 + " --prime 11 --precision 1 --guard-digits 1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("guard_check") == "ok");
}

TEST_CASE("limit: non-ordinary input exits 1") {
    const RunResult r =
        run_cli("limit --poly \"y^2 - x^3 + x\" --vars x,y --prime 3 --precision 2");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("non-ordinary") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
    CHECK(run_cli("limit --poly \"y^2 - \" --vars x,y --prime 11").exit_code == 2);
    CHECK(run_cli("limit " + kGenus2 + " --prime 10").exit_code == 2);
    CHECK(run_cli("interior-points --poly \"q + 1\" --vars x").exit_code == 2);
    CHECK(run_cli("limit --vars x,y --prime 11").exit_code == 2);
    CHECK(run_cli("verify " + kGenus2).exit_code == 2); // missing --prime
}

TEST_CASE("verify: full report passes on the genus-2 curve") {
    const RunResult r =
        run_cli("verify " + kGenus2 + " --prime 11 --max-s 2 --format json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("all_pass") == true);
    CHECK(doc.at("checks").size() >= 4);
}

TEST_CASE("ghost-verify: small run in json mode") {
    const RunResult r = run_cli(
        "ghost-verify --poly \"x^2 - 3*x + 1\" --vars x --prime 2 --max-n 8 --format json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("all_pass") == true);
    bool found_reassembly = false;
    for (const auto& c : doc.at("checks"))
        if (std::string(c.at("name")).find("reassemble") != std::string::npos)
            found_reassembly = true;
    CHECK(found_reassembly);
}

TEST_CASE("double-cover: corollary and digits on the genus-2 curve") {
    const RunResult r = run_cli("double-cover " + kGenus2 +
                                " --prime 11 --precision 3 --frobpoly \"1,3,18,33,121\" "
                                "--max-s 2 --format json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("all_pass") == true);
    CHECK(doc.at("trace").at("digits") == "8 + 11 + 11^2 + O(11^3)");
    CHECK(doc.at("det").at("digits") == "7 + 6*11 + 3*11^2 + O(11^3)");
}

TEST_CASE("log-coeffs: rational matrices") {
    const RunResult r =
        run_cli("log-coeffs " + kGenus2 + " --prime 11 --terms 11 --format json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    const auto& list = doc.at("log_coefficients");
    REQUIRE(list.size() == 11);
    CHECK(list[0].at("matrix").at("entries")[0][0] == "1");
    CHECK(list[10].at("matrix").at("entries")[0][0] == "-81144/11");
}

TEST_CASE("json mode emits a single valid document") {
    for (const std::string sub :
         {std::string("interior-points " + kGenus2),
          std::string("limit " + kGenus2 + " --prime 11 --precision 1"),
          std::string("verify " + kGenus2 + " --prime 11 --max-s 1")}) {
        const RunResult r = run_cli(sub + " --format json");
        CHECK(r.exit_code == 0);
        CHECK_NOTHROW((void)json::parse(r.out));
    }
}

TEST_CASE("identical runs produce byte-identical output across --threads") {
    const RunResult a =
        run_cli("limit " + kGenus2 + " --prime 11 --precision 2 --format json --threads 1");
    const RunResult b =
        run_cli("limit " + kGenus2 + " --prime 11 --precision 2 --format json --threads 8");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("polynomial file input") {
    const std::string path = "/tmp/unitroot_cli_test_poly.json";
    {
        std::ofstream out(path);
        out << R"({"variables": ["x", "y"], "terms": [)"
            << R"({"coefficient": "-1", "exponents": [0, 0]},)"
            << R"({"coefficient": "1", "exponents": [0, 2]},)"
            << R"({"coefficient": "-1", "exponents": [1, 0]},)"
            << R"({"coefficient": "-2", "exponents": [2, 0]},)"
            << R"({"coefficient": "-1", "exponents": [5, 0]}]})";
    }
    const RunResult r =
        run_cli("interior-points --poly-file " + path + " --format json");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("h") == 2);
    std::remove(path.c_str());
}
