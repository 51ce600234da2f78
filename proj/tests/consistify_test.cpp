#include <doctest.h>

#include "cycontext/consistify.hpp"
#include "cycontext/generators.hpp"
#include "cycontext/measures.hpp"
#include "test_support.hpp"

using namespace cycontext;
using testsupport::frac;

TEST_CASE("doubling interleaves bunches and couplings") {
    const auto res = consistify(preset("example2"));
    const CyclicSystem& c = res.system;
    REQUIRE(c.rank() == 6);
    REQUIRE(res.map.original_rank == 3);
    REQUIRE(res.map.new_rank == 6);
    using Kind = ConsistificationMap::Source::Kind;
    const std::vector<std::pair<Kind, int>> expected = {
        {Kind::original_bunch, 1}, {Kind::connection_coupling, 2},
        {Kind::original_bunch, 2}, {Kind::connection_coupling, 3},
        {Kind::original_bunch, 3}, {Kind::connection_coupling, 1}};
    for (std::size_t k = 0; k < expected.size(); ++k) {
        CHECK(res.map.sources[k].kind == expected[k].first);
        CHECK(res.map.sources[k].index == expected[k].second);
    }

    // odd positions are the original bunches
    const CyclicSystem orig = preset("example2");
    for (int i = 1; i <= 3; ++i) {
        const auto& a = c.bunch(2 * i - 1);
        const auto& b = orig.bunch(i);
        CHECK(a.p00 == b.p00);
        CHECK(a.p01 == b.p01);
        CHECK(a.p10 == b.p10);
        CHECK(a.p11 == b.p11);
    }
    // even positions are couplings with swapped off-diagonal cells
    const auto& q3 = c.bunch(4);  // coupling of content 3: (1/2, 1/16, 0, 7/16)
    CHECK(q3.p00 == frac(1, 2));
    CHECK(q3.p01 == 0);
    CHECK(q3.p10 == frac(1, 16));
    CHECK(q3.p11 == frac(7, 16));
    const auto& q1 = c.bunch(6);
    CHECK(q1.p00 == frac(1, 2));
    CHECK(q1.p01 == 0);
    CHECK(q1.p10 == 0);
    CHECK(q1.p11 == frac(1, 2));
}

TEST_CASE("consistified systems are consistently connected") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s = random_system({3 + static_cast<int>(seed % 3), seed, 16});
        const auto res = consistify(s);
        CHECK(res.system.rank() == 2 * s.rank());
        CHECK(res.system.is_consistently_connected());
    }
}

TEST_CASE("measure relations under consistification") {
    for (const auto& s : {preset("example1"), preset("example2"), preset("pr-box")}) {
        const auto rel = verify_consistification_relations(s);
        CHECK(rel.new_rank == 2 * s.rank());
        CHECK(rel.cntf_invariant);
        CHECK(rel.cnt3_ratio_holds);
        CHECK(rel.consistified_consistent);
        CHECK((rel.cnt3_original == 0) == (rel.cnt3_consistified == 0));
    }
    const auto ex1 = verify_consistification_relations(preset("example1"));
    CHECK(ex1.cnt3_original == frac(1, 8));
    CHECK(ex1.cnt3_consistified == frac(1, 20));
    CHECK(ex1.cntf_consistified == frac(1, 4));
}

TEST_CASE("contextuality status is preserved") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto s = random_system({2, seed, 8});
        CHECK(is_noncontextual(s) == is_noncontextual(consistify(s).system));
    }
}

TEST_CASE("double consistification") {
    const auto once = consistify(preset("example1")).system;
    const auto rel = verify_consistification_relations(once);
    CHECK(rel.new_rank == 12);
    CHECK(rel.cnt3_original == frac(1, 20));
    CHECK(rel.cnt3_consistified == frac(1, 44));  // scaled by 5/11
    CHECK(rel.cntf_invariant);
    CHECK(rel.cnt3_ratio_holds);
}

TEST_CASE("rank-2 inputs consistify to rank 4") {
    const CyclicSystem odd(2, {{frac(1, 2), Rational(0), Rational(0), frac(1, 2)},
                               {Rational(0), frac(1, 2), frac(1, 2), Rational(0)}});
    const auto rel = verify_consistification_relations(odd);
    CHECK(rel.new_rank == 4);
    CHECK(rel.cnt3_original == 1);
    CHECK(rel.cnt3_consistified == frac(1, 3));
    CHECK(rel.cntf_consistified == 1);
    CHECK(rel.consistified_consistent);
}
