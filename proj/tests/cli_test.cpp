#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct RunResult {
    int status = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = "cli_test_stdout.txt";
    const std::string err_path = "cli_test_stderr.txt";
    const std::string command =
        std::string(YTWIST_BIN) + " " + args + " >" + out_path + " 2>" + err_path;
    const int raw = std::system(command.c_str());
    RunResult result;
    REQUIRE(raw != -1);
    REQUIRE(WIFEXITED(raw));
    result.status = WEXITSTATUS(raw);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

const char* kFundamentalPair =
    "--lambda1 1/2 --lambda2 1/2 --delta1 2 --delta2 0 --eta 1";

}  // namespace

TEST_CASE("twist subcommand emits the inverse twist as JSON") {
    const RunResult r =
        run_cli(std::string("twist ") + kFundamentalPair + " --family F --direction inverse");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["object"] == "twist");
    CHECK(j["metadata"]["family"] == "F");
    CHECK(j["metadata"]["direction"] == "inverse");
    CHECK(j["metadata"]["swapped"] == false);
    CHECK(j["metadata"]["params"]["lambda1"] == "1/2");
    REQUIRE(j["basis"].size() == 4);
    CHECK(j["basis"][1] == json::array({0, 1}));
    CHECK(j["basis"][2] == json::array({1, 0}));
    // |0,1> -> 2|0,1> - |1,0>
    CHECK(j["entries"][1][1] == "2");
    CHECK(j["entries"][2][1] == "-1");
    CHECK(j["entries"][0][0] == "1");
}

TEST_CASE("twist output is byte-deterministic") {
    const std::string args = std::string("twist ") + kFundamentalPair;
    const RunResult first = run_cli(args + " --output cli_test_a.json");
    const RunResult second = run_cli(args + " --output cli_test_b.json");
    REQUIRE(first.status == 0);
    REQUIRE(second.status == 0);
    const std::string a = slurp("cli_test_a.json");
    const std::string b = slurp("cli_test_b.json");
    CHECK_FALSE(a.empty());
    CHECK(a == b);
}

TEST_CASE("block twists on truncated Verma factors") {
    const RunResult r = run_cli(
        "twist --lambda1 1/3 --cutoff1 6 --lambda2 1/3 --cutoff2 6 "
        "--delta1 2 --delta2 0 --eta 1 --block 1");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["metadata"]["block"] == 1);
    CHECK(j["basis"] == json::array({json::array({0, 1}), json::array({1, 0})}));
    CHECK(j["entries"][0][0] == "3/2");
    CHECK(j["entries"][1][0] == "-1/2");
    CHECK(j["entries"][1][1] == "1");
}

TEST_CASE("rmatrix subcommand") {
    const RunResult r = run_cli(std::string("rmatrix ") + kFundamentalPair + " --method gauss");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["object"] == "rmatrix");
    CHECK(j["metadata"]["method"] == "gauss");
    CHECK(j["entries"][1][1] == "2/3");
    CHECK(j["entries"][2][1] == "1/3");
}

TEST_CASE("rmatrix at a genuine pole exits with the pole status") {
    const RunResult r =
        run_cli("rmatrix --lambda1 1/2 --lambda2 1/2 --delta1 0 --delta2 1 --eta 1");
    CHECK(r.status == 3);
    CHECK(r.err.find("pole error") != std::string::npos);
}

TEST_CASE("check subcommand runs the full suite") {
    const RunResult r =
        run_cli("check --suite all --lambda1 1/2 --lambda2 1 --delta1 5 --delta2 0 --eta 1");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["object"] == "check");
    CHECK(j["passed"] == true);
    // diag + three cocommutativity families + factorization + intertwiner.
    REQUIRE(j["reports"].size() == 6);
    CHECK(j["reports"][0]["check"] == "diagonalization");
    for (const json& report : j["reports"]) {
        CHECK(report["passed"] == true);
    }
}

TEST_CASE("check subcommand runs the Yang-Baxter suite") {
    const RunResult r = run_cli(
        "check --suite ybe --lambda1 1/2 --lambda2 1/2 --lambda3 1/2 "
        "--delta1 3 --delta2 1 --delta3 0 --eta 1");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["passed"] == true);

    const RunResult missing =
        run_cli(std::string("check --suite ybe ") + kFundamentalPair);
    CHECK(missing.status == 2);
}

TEST_CASE("scan subcommand") {
    const RunResult r =
        run_cli("scan --lambda1 1/2 --lambda2 1/2 --eta 1 --candidates -2,-1,0,1,2");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["object"] == "scan");
    CHECK(j["all_consistent"] == true);
    REQUIRE(j["candidates"].size() == 5);
    CHECK(j["candidates"][2]["value"] == "0");
    CHECK(j["candidates"][2]["f12_built"] == false);
    CHECK(j["candidates"][3]["f12_inv_built"] == false);
    CHECK(j["candidates"][3]["predicted_reducible"] == true);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_cli("twist --no-such-flag").status == 2);
    CHECK(run_cli(std::string("twist ") + kFundamentalPair + " --family Q").status == 2);
    CHECK(run_cli("rmatrix --lambda1 1/2 --lambda2 1/2 --delta1 x --delta2 0 --eta 1").status ==
          2);
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("--help").status == 0);
}

TEST_CASE("alternative output formats") {
    const RunResult csv = run_cli(std::string("rmatrix ") + kFundamentalPair + " --format csv");
    REQUIRE(csv.status == 0);
    CHECK(csv.out.rfind("row,col,entry", 0) == 0);

    const RunResult pretty =
        run_cli(std::string("twist ") + kFundamentalPair + " --format pretty");
    REQUIRE(pretty.status == 0);
    CHECK_FALSE(pretty.out.empty());

    const RunResult scan_csv =
        run_cli("scan --lambda1 1/2 --lambda2 1/2 --eta 1 --candidates 0,1 --format csv");
    REQUIRE(scan_csv.status == 0);
    CHECK(scan_csv.out.find("value") != std::string::npos);

    const RunResult check_csv = run_cli(
        std::string("check --suite diag ") + kFundamentalPair + " --format csv");
    REQUIRE(check_csv.status == 0);
    CHECK(check_csv.out.rfind("check,item,passed", 0) == 0);
}
