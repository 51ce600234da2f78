#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include "test_support.hpp"

using nlohmann::json;
using testsupport::run_command;

namespace {

std::string bin() {
    const std::string b = testsupport::cli_binary();
    REQUIRE_MESSAGE(!b.empty(), "CYCONTEXT_BIN must point at the CLI binary");
    return b;
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path(name) {
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("analyze reports the measures of a piped system") {
    const auto r = run_command(bin() + " generate --preset example1 | " + bin() + " analyze -");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("rank") == 3);
    CHECK(doc.at("cnt3") == "1/8");
    CHECK(doc.at("cntf") == "1/4");
    CHECK(doc.at("noncontextual") == false);
    CHECK(doc.at("consistently_connected") == true);
    CHECK(doc.at("proportionality").at("holds") == true);
    CHECK(doc.at("proportionality").at("factor") == 2);
    CHECK(doc.at("input").at("rank") == 3);
    CHECK_FALSE(doc.contains("witnesses"));
    CHECK_FALSE(doc.contains("consistification"));
}

TEST_CASE("analyze with witnesses and consistification") {
    const auto r = run_command(bin() + " generate --preset example2 | " + bin() +
                               " analyze --witnesses --consistify -");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("consistently_connected") == false);
    const json& w = doc.at("witnesses");
    cycontext::Rational neg(0);
    for (const auto& [atom, value] : w.at("signed").items()) {
        const auto x = cycontext::parse_rational(value.get<std::string>());
        if (x < 0) neg -= x;
    }
    CHECK(neg == testsupport::frac(1, 16));
    const json& c = doc.at("consistification");
    CHECK(c.at("new_rank") == 6);
    CHECK(c.at("cnt3") == "1/20");
    CHECK(c.at("cntf") == "1/4");
    CHECK(c.at("cntf_invariant") == true);
    CHECK(c.at("cnt3_ratio_holds") == true);
    CHECK(c.at("consistently_connected") == true);
}

TEST_CASE("analyze reads files and rejects bad ones") {
    const auto good = run_command(bin() + " generate --preset pr-box");
    REQUIRE(good.exit_code == 0);
    TempFile f("cli_test_system.json", good.output);
    const auto r = run_command(bin() + " analyze " + f.path);
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.output).at("cnt3") == "1/3");
    CHECK(json::parse(r.output).at("cntf") == "1/1");

    CHECK(run_command(bin() + " analyze does_not_exist.json 2>/dev/null").exit_code == 2);
    TempFile bad("cli_test_bad.json", "{not json");
    CHECK(run_command(bin() + " analyze " + bad.path + " 2>/dev/null").exit_code == 2);
    TempFile invalid("cli_test_invalid.json",
                     R"({"rank":2,"bunches":[{"p00":"1","p01":"0","p10":"0","p11":"1"},)"
                     R"({"p00":"1","p01":"0","p10":"0","p11":"0"}]})");
    CHECK(run_command(bin() + " analyze " + invalid.path + " 2>/dev/null").exit_code == 2);
    CHECK(run_command("echo garbage | " + bin() + " analyze - 2>/dev/null").exit_code == 2);
}

TEST_CASE("generate flag handling") {
    CHECK(run_command(bin() + " generate --preset nope 2>/dev/null").exit_code == 2);
    CHECK(run_command(bin() + " generate 2>/dev/null").exit_code == 2);
    CHECK(run_command(bin() + " generate --preset example1 --random --rank 3 2>/dev/null")
              .exit_code == 2);
    CHECK(run_command(bin() + " generate --random 2>/dev/null").exit_code == 2);  // rank required
    const auto r = run_command(bin() + " generate --random --rank 4 --seed 9 --denominator 12");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("rank") == 4);
    CHECK(doc.at("bunches").size() == 4);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_command(bin() + " --help").exit_code == 0);
    CHECK(run_command(bin() + " analyze --help").exit_code == 0);
    CHECK(run_command(bin() + " 2>/dev/null").exit_code == 2);  // subcommand required
    CHECK(run_command(bin() + " frobnicate 2>/dev/null").exit_code == 2);
}

TEST_CASE("verify runs seeded trials") {
    const auto r = run_command(bin() + " verify --rank 2 --trials 10 --seed 3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("passed 10/10") != std::string::npos);
    CHECK(run_command(bin() + " verify --rank 9 --trials 1 2>/dev/null").exit_code == 2);
    CHECK(run_command(bin() + " verify --trials 1 2>/dev/null").exit_code == 2);
    const auto consistent =
        run_command(bin() + " verify --rank 3 --trials 5 --seed 1 --consistent --deep");
    CHECK(consistent.exit_code == 0);
    CHECK(consistent.output.find("passed 5/5") != std::string::npos);
}

TEST_CASE("consistify emits the doubled system") {
    const auto r =
        run_command(bin() + " generate --preset example2 | " + bin() + " consistify -");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    REQUIRE(doc.at("rank") == 6);
    const json& q3 = doc.at("bunches").at(3);
    CHECK(q3.at("p00") == "1/2");
    CHECK(q3.at("p01") == "0/1");
    CHECK(q3.at("p10") == "1/16");
    CHECK(q3.at("p11") == "7/16");
    // the output parses back as a valid input
    TempFile f("cli_test_doubled.json", r.output);
    const auto again = run_command(bin() + " analyze " + f.path);
    REQUIRE(again.exit_code == 0);
    CHECK(json::parse(again.output).at("cnt3") == "1/20");
}

TEST_CASE("reports are stable across runs") {
    const std::string cmd = bin() + " generate --preset example2 | " + bin() + " analyze -";
    auto a = json::parse(run_command(cmd).output);
    auto b = json::parse(run_command(cmd).output);
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(a == b);
}
