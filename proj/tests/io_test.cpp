#include <doctest.h>

#include <stdexcept>
#include <string>

#include "cycontext/generators.hpp"
#include "cycontext/io.hpp"
#include "cycontext/rational.hpp"
#include "test_support.hpp"

using namespace cycontext;
using testsupport::frac;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == frac(3, 4));
    CHECK(parse_rational("6/8") == frac(3, 4));
    CHECK(parse_rational("0") == 0);
    CHECK(parse_rational("2") == 2);
    CHECK(parse_rational("-1/2") == frac(-1, 2));
    CHECK(parse_rational("0.125") == frac(1, 8));
    CHECK(parse_rational("0.3") == frac(3, 10));
    CHECK(parse_rational(".5") == frac(1, 2));
    CHECK(parse_rational("-0.25") == frac(-1, 4));
    for (const char* bad : {"", "1/0", "a", "1.2.3", "1/3x", "1.", "1/-2", "0x10"}) {
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
    }
}

TEST_CASE("rational formatting") {
    CHECK(format_rational(frac(1, 8)) == "1/8");
    CHECK(format_rational(Rational(0)) == "0/1");
    CHECK(format_rational(Rational(2)) == "2/1");
    CHECK(format_rational(frac(-7, 16)) == "-7/16");
}

TEST_CASE("system files round-trip") {
    for (const char* name : {"example1", "example2", "pr-box"}) {
        const CyclicSystem s = preset(name);
        const CyclicSystem back = parse_system_file(serialize_system_file(s));
        REQUIRE(back.rank() == s.rank());
        for (int i = 1; i <= s.rank(); ++i) {
            CHECK(back.bunch(i).p00 == s.bunch(i).p00);
            CHECK(back.bunch(i).p01 == s.bunch(i).p01);
            CHECK(back.bunch(i).p10 == s.bunch(i).p10);
            CHECK(back.bunch(i).p11 == s.bunch(i).p11);
        }
    }
}

TEST_CASE("decimals and fractions mix on input") {
    const CyclicSystem s = parse_system_file(R"({
        "rank": 2,
        "bunches": [
            {"p00": "0.125", "p01": "0.375", "p10": "3/8", "p11": "1/8"},
            {"p00": "1/4", "p01": "0.25", "p10": "1/4", "p11": "0.25"}
        ]
    })");
    CHECK(s.bunch(1).p00 == frac(1, 8));
    CHECK(s.bunch(1).p01 == s.bunch(1).p10);
    CHECK(s.bunch(2).p11 == frac(1, 4));
}

TEST_CASE("parse errors carry field paths") {
    auto message_of = [](const std::string& text) {
        try {
            parse_system_file(text);
        } catch (const std::invalid_argument& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message_of("not json").find("input is not valid JSON") == 0);
    CHECK(message_of("[1,2]").find("top level") == 0);
    CHECK(message_of(R"({"bunches": []})").find("rank") != std::string::npos);
    const std::string missing = message_of(R"({
        "rank": 2,
        "bunches": [
            {"p00": "1/4", "p01": "1/4", "p10": "1/4", "p11": "1/4"},
            {"p00": "1/4", "p01": "1/4", "p10": "1/4"}
        ]
    })");
    CHECK(missing.find("bunches[1].p11") != std::string::npos);
    const std::string malformed = message_of(R"({
        "rank": 2,
        "bunches": [
            {"p00": "1/4", "p01": "1/4", "p10": "1/4", "p11": "1/4"},
            {"p00": "1/4", "p01": "1/4", "p10": "1/4", "p11": "nope"}
        ]
    })");
    CHECK(malformed.find("bunches[1].p11") != std::string::npos);
    const std::string numeric = message_of(R"({
        "rank": 2,
        "bunches": [
            {"p00": 0.25, "p01": "1/4", "p10": "1/4", "p11": "1/4"},
            {"p00": "1/4", "p01": "1/4", "p10": "1/4", "p11": "1/4"}
        ]
    })");
    CHECK(numeric.find("bunches[0].p00") != std::string::npos);
    const std::string invalid = message_of(R"({
        "rank": 2,
        "bunches": [
            {"p00": "1/2", "p01": "1/2", "p10": "1/2", "p11": "-1/2"},
            {"p00": "1/4", "p01": "1/4", "p10": "1/4", "p11": "1/4"}
        ]
    })");
    CHECK_FALSE(invalid.empty());
    const std::string count = message_of(R"({
        "rank": 3,
        "bunches": [
            {"p00": "1/4", "p01": "1/4", "p10": "1/4", "p11": "1/4"},
            {"p00": "1/4", "p01": "1/4", "p10": "1/4", "p11": "1/4"}
        ]
    })");
    CHECK_FALSE(count.empty());
}

TEST_CASE("serialized form is stable") {
    const std::string text = serialize_system_file(preset("example1"));
    CHECK(text.find("\"rank\": 3") != std::string::npos);
    CHECK(text.find("\"p00\": \"1/8\"") != std::string::npos);
    CHECK(text.back() == '\n');
    CHECK(serialize_system_file(preset("example1")) == text);
}
