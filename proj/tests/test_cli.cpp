#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Run the installed binary with stderr discarded, capturing stdout.
RunResult run(const std::string& args) {
    const std::string cmd = std::string("'") + CDU_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    REQUIRE(status != -1);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::vector<json> json_lines(const std::string& s) {
    std::vector<json> out;
    for (const auto& line : lines_of(s)) out.push_back(json::parse(line));
    return out;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("field-info reports structure for even and odd degrees") {
    auto r = run("field-info --n 6");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["n"] == 6);
    CHECK(j["poly_hex"] == "0x43");
    CHECK(j["order"] == 64);
    CHECK(j["subfield_degrees"] == json::array({1, 2, 3, 6}));
    CHECK(j["m"] == 3);
    CHECK(j["circle_size"] == 9);

    auto r5 = run("field-info --n 5");
    CHECK(r5.exit_code == 0);
    const json j5 = json::parse(r5.out);
    CHECK(j5["order"] == 32);
    CHECK(!j5.contains("m"));
    CHECK(!j5.contains("circle_size"));

    auto rc = run("field-info --n 6 --format csv");
    CHECK(rc.exit_code == 0);
    const auto ls = lines_of(rc.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "n,poly_hex,order,subfield_degrees,m,circle_size");
    CHECK(ls[1] == "6,0x43,64,1 2 3 6,3,9");

    CHECK(run("field-info --n 4 --poly 0x15").exit_code == 2);  // reducible
    CHECK(run("field-info --n 0").exit_code == 2);
}

TEST_CASE("spectrum of x^5 over F_16 at a single c") {
    auto r = run("spectrum --n 4 --d 5 --c 0x2");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["c"] == "0x2");
    CHECK(j["uniformity"] == 5);
    CHECK(j["a0_gcd"] == 5);
    CHECK(j["histogram"] == json({{"0", 6}, {"1", 4}, {"2", 6}}));
    CHECK(j["pcn"] == false);
    CHECK(j["apcn"] == false);
}

TEST_CASE("spectrum over the circle selector") {
    auto r = run("spectrum --n 6 --d 15 --c circle");
    CHECK(r.exit_code == 0);
    const auto js = json_lines(r.out);
    REQUIRE(js.size() == 8);
    const std::vector<std::string> expected_c{"0x6",  "0xb",  "0x14", "0x1a",
                                              "0x1c", "0x1f", "0x3a", "0x3b"};
    for (std::size_t i = 0; i < js.size(); ++i) {
        CHECK(js[i]["c"] == expected_c[i]);
        CHECK(js[i]["uniformity"] == 3);
        CHECK(js[i]["a0_gcd"] == 3);
    }
    CHECK(run("spectrum --n 5 --d 3 --c circle").exit_code == 2);  // odd degree
}

TEST_CASE("spectrum csv lists every b row") {
    auto r = run("spectrum --n 4 --d 5 --c 0x2 --format csv");
    CHECK(r.exit_code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 17);
    CHECK(ls[0] == "c_hex,b_hex,count");
    unsigned sum = 0;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        CHECK(ls[i].rfind("0x2,", 0) == 0);
        sum += std::stoul(ls[i].substr(ls[i].rfind(',') + 1));
    }
    CHECK(sum == 16);  // each x lands in exactly one bucket
}

TEST_CASE("cdu full scan agrees with spectrum across all c") {
    auto rs = run("spectrum --n 4 --d 5 --c all");
    auto rc = run("cdu --n 4 --d 5 --c all");
    CHECK(rs.exit_code == 0);
    CHECK(rc.exit_code == 0);
    const auto js = json_lines(rs.out);
    const auto jc = json_lines(rc.out);
    REQUIRE(js.size() == 16);
    REQUIRE(jc.size() == 16);
    for (std::size_t i = 0; i < js.size(); ++i) {
        CHECK(js[i]["c"] == jc[i]["c"]);
        CHECK(js[i]["uniformity"] == jc[i]["uniformity"]);
    }
}

TEST_CASE("polar decomposition prints the subfield-circle split") {
    auto r = run("polar --n 4 0x7");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["x"] == "0x7");
    CHECK(j["alpha"] == "0x7");
    CHECK(j["u"] == "0x1");
    CHECK(run("polar --n 4 0x0").exit_code == 2);
    CHECK(run("polar --n 5 0x2").exit_code == 2);
    CHECK(run("polar --n 4 zz").exit_code == 2);
}

TEST_CASE("quad-roots enumerates field and circle roots") {
    auto r = run("quad-roots --n 4 2 0x0 0x0 0x1");  // x^5 + 1
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    const json mu5 = json::array({"0x1", "0x8", "0xa", "0xc", "0xf"});
    CHECK(j["roots"] == mu5);
    CHECK(j["root_count"] == 5);
    CHECK(j["circle_roots"] == mu5);
    auto r5 = run("quad-roots --n 5 1 0x0 0x1 0x1");
    CHECK(r5.exit_code == 0);
    CHECK(!json::parse(r5.out).contains("circle_roots"));  // odd degree: no circle
}

TEST_CASE("verify-theorem1 checks the closed form against brute force") {
    auto r = run("verify-theorem1 --m 3 --k 2");
    CHECK(r.exit_code == 0);
    const auto js = json_lines(r.out);
    REQUIRE(js.size() == 8);
    for (const auto& j : js) {
        CHECK(j["m"] == 3);
        CHECK(j["k"] == 2);
        CHECK(j["s"] == 2);
        CHECK(j["d"] == 15);
        CHECK(j["structural_uniformity"] == 3);
        CHECK(j["brute_uniformity"] == 3);
        CHECK(j["expected"] == 3);
        CHECK(j["pass"] == true);
    }
}

TEST_CASE("verify-theorem1 records invalid pairs as skips") {
    auto r = run("verify-theorem1 --m 2 --k 1");
    CHECK(r.exit_code == 0);
    const auto js = json_lines(r.out);
    REQUIRE(js.size() == 1);
    CHECK(js[0]["m"] == 2);
    CHECK(js[0]["k"] == 1);
    CHECK(js[0]["skip"] == "m must be odd and >= 3");

    auto r33 = run("verify-theorem1 --m 3 --k 3");
    CHECK(r33.exit_code == 0);
    CHECK(json_lines(r33.out)[0]["skip"] == "invalid (m, k): gcd(2^k+1, 2^m+1) = 9");
}

TEST_CASE("verify-theorem1 csv carries the full verdict row") {
    auto r = run("verify-theorem1 --m 3 --k 4 --format csv");
    CHECK(r.exit_code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 9);
    CHECK(ls[0] ==
          "m,k,s,d,c_hex,structural_uniformity,brute_uniformity,expected,pass,note");
    CHECK(ls[1].rfind("3,4,8,57,", 0) == 0);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        CHECK(ls[i].find(",true,") != std::string::npos);
    }
}

TEST_CASE("verify-table1 summary at n = 8 matches the catalog census") {
    auto r = run("verify-table1 --n 8");
    CHECK(r.exit_code == 0);
    const auto js = json_lines(r.out);
    REQUIRE(!js.empty());
    const json summary = js.back();
    CHECK(summary["all_pass"] == true);
    CHECK(summary["entries"] == 3298);
    CHECK(summary["asserted"] == 3250);
    CHECK(summary["asserted_failures"] == 0);
    CHECK(summary["recorded_failures"] == 34);
    unsigned rows = 0, entries = 0;
    for (const auto& j : js) {
        if (j.contains("description")) ++rows;
        if (j.contains("observed")) ++entries;
    }
    CHECK(rows == 7);
    CHECK(entries == 3298);
}

TEST_CASE("remark-experiments sweeps an even-m construction") {
    auto r = run("remark-experiments --m 2 --k 1 --c circle");
    CHECK(r.exit_code == 0);
    const auto js = json_lines(r.out);
    REQUIRE(js.size() == 5);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(js[i]["uniformity"] == 2);
        CHECK(js[i]["in_circle"] == true);
    }
    const json summary = js.back();
    CHECK(summary["m"] == 2);
    CHECK(summary["d"] == 7);
    CHECK(summary["has_claim"] == true);
    CHECK(summary["expected_set"] == json::array({2, 5}));
    CHECK(summary["all_in_expected"] == true);
}

TEST_CASE("--out writes the same bytes shown on stdout") {
    const std::string path = temp_path("cdu_cli_out_test.jsonl");
    auto direct = run("spectrum --n 4 --d 5 --c all");
    auto filed = run("spectrum --n 4 --d 5 --c all --out '" + path + "'");
    CHECK(direct.exit_code == 0);
    CHECK(filed.exit_code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(path) == direct.out);
    std::filesystem::remove(path);
    CHECK(run("spectrum --n 4 --d 5 --c all --out /nonexistent-dir/x").exit_code == 2);
}

TEST_CASE("output is independent of the worker count") {
    auto one = run("spectrum --n 6 --d 15 --c all --jobs 1");
    auto many = run("spectrum --n 6 --d 15 --c all --jobs 8");
    CHECK(one.exit_code == 0);
    CHECK(many.exit_code == 0);
    CHECK(one.out == many.out);
    REQUIRE(!one.out.empty());
}

TEST_CASE("usage errors exit with 2, help with 0") {
    CHECK(run("").exit_code == 2);
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("spectrum --n 4").exit_code == 2);          // missing --d
    CHECK(run("spectrum --n 4 --d 0 --c 0x2").exit_code == 2);
    CHECK(run("spectrum --n 4 --d 5 --c 0x2 --format xml").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("spectrum --help").exit_code == 0);
}
