#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::ordered_json;

#ifndef PV_CLI_PATH
#error "PV_CLI_PATH must point at the pv executable"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string write_temp(const std::string& content) {
    static int counter = 0;
    std::string path = "cli_input_" + std::to_string(counter++) + ".json";
    std::ofstream f(path);
    f << content;
    return path;
}

RunResult run_cli(const std::string& args, const std::string& input_json = "") {
    std::string cmd = std::string(PV_CLI_PATH) + " " + args;
    if (!input_json.empty()) cmd += " --input " + write_temp(input_json);
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("prolong emits the block pattern") {
    auto r = run_cli("prolong", R"({"spec":"shift","A":[["x"]],"n":2})");
    REQUIRE(r.exit_code == 0);
    Json rep = Json::parse(r.out);
    REQUIRE(rep.contains("inputs_echo"));
    REQUIRE(rep.contains("result"));
    REQUIRE(rep.contains("checks"));
    auto rows = rep["result"]["A_n"]["flat"];
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == Json::array({"x", "0", "0"}));
    CHECK(rows[1] == Json::array({"1", "x", "0"}));
    CHECK(rows[2] == Json::array({"0", "2", "x"}));
    for (const auto& c : rep["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("verify passes clean systems and flags corrupted blocks") {
    auto ok = run_cli("verify", R"({"spec":"shift","A":[["x"]],"n":1})");
    CHECK(ok.exit_code == 0);

    auto bad = run_cli("verify", R"({"spec":"shift","A":[["x"]],"n":1,"corrupt_block":[1,0]})");
    CHECK(bad.exit_code == 1);
    Json rep = Json::parse(bad.out);
    bool any_fail = false;
    for (const auto& c : rep["checks"])
        if (c["pass"] == false) any_fail = true;
    CHECK(any_fail);
}

TEST_CASE("compose and components round simple examples") {
    auto c = run_cli("compose", R"({"spec":"shift","A":[["x"]],"l":2})");
    REQUIRE(c.exit_code == 0);
    Json rep = Json::parse(c.out);
    CHECK(rep["result"]["A_l"][0][0] == "x^2 + x");

    auto comp = run_cli("components", R"({"r":[2]})");
    REQUIRE(comp.exit_code == 0);
    Json crep = Json::parse(comp.out);
    CHECK(crep["result"]["l"] == 2);
    CHECK(crep["result"]["single_orbit"] == true);

    auto ex = run_cli("exact-seq", R"({"r":[4]})");
    REQUIRE(ex.exit_code == 0);
    Json xrep = Json::parse(ex.out);
    CHECK(xrep["result"]["exact"] == true);
    CHECK(xrep["result"]["l"] == 4);
    CHECK(xrep["result"]["group_order"] == 4);
    CHECK(xrep["result"]["kernel_order"] == 1);
}

TEST_CASE("check-invariance distinguishes accepted and rejected jets") {
    std::string diag = R"({"spec":"shift","order":0,"m":2,
        "generators":["Y0_12","Y0_21"],
        "jet":{"order":0,"matrices":[[["2","0"],["0","3"]]]}})";
    auto ok = run_cli("check-invariance", diag);
    CHECK(ok.exit_code == 0);
    CHECK(Json::parse(ok.out)["result"]["invariant"] == true);

    std::string anti = R"({"spec":"shift","order":0,"m":2,
        "generators":["Y0_12","Y0_21"],
        "jet":{"order":0,"matrices":[[["0","1"],["1","0"]]]}})";
    auto bad = run_cli("check-invariance", anti);
    CHECK(bad.exit_code == 1);
    Json rep = Json::parse(bad.out);
    CHECK(rep["result"]["invariant"] == false);
    CHECK(rep["result"]["failing_generator"] == 0);
}

TEST_CASE("error and budget exit codes") {
    auto bad_json = run_cli("prolong", "{not json");
    CHECK(bad_json.exit_code == 2);

    auto bad_expr = run_cli("prolong", R"({"spec":"shift","A":[["x+%"]],"n":1})");
    CHECK(bad_expr.exit_code == 2);

    auto budget = run_cli("selftest --seed 5 --budget 1");
    CHECK(budget.exit_code == 3);
}

TEST_CASE("seeded selftest runs are byte-identical") {
    auto a = run_cli("selftest --seed 42");
    auto b = run_cli("selftest --seed 42");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    auto jobs = run_cli("selftest --seed 42 --jobs 4");
    CHECK(jobs.exit_code == 0);
    CHECK(jobs.out == a.out);
}
