#include <doctest.h>

#include <stdexcept>

#include "cycontext/coupling.hpp"
#include "cycontext/generators.hpp"
#include "test_support.hpp"

using namespace cycontext;
using testsupport::frac;

TEST_CASE("multimaximal coupling of fixed marginals") {
    const ConnectionCoupling c = multimaximal_coupling(frac(1, 2), frac(7, 16));
    CHECK(c.p11 == frac(7, 16));
    CHECK(c.p00 == frac(1, 2));
    CHECK(c.p10 == frac(1, 16));
    CHECK(c.p01 == 0);

    const ConnectionCoupling d = multimaximal_coupling(frac(7, 16), frac(1, 2));
    CHECK(d.p11 == frac(7, 16));
    CHECK(d.p00 == frac(1, 2));
    CHECK(d.p10 == 0);
    CHECK(d.p01 == frac(1, 16));

    CHECK_THROWS_AS(multimaximal_coupling(frac(3, 2), frac(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(multimaximal_coupling(frac(1, 2), frac(-1, 8)), std::invalid_argument);
}

TEST_CASE("agreement is maximal over the coupling polytope") {
    // All couplings of marginals (a, b) form a segment parameterized by
    // t = p11 in [max(0, a+b-1), min(a, b)]; scan the lattice of (a, b, t).
    const int d = 8;
    for (int ia = 0; ia <= d; ++ia) {
        for (int ib = 0; ib <= d; ++ib) {
            const Rational a = frac(ia, d), b = frac(ib, d);
            const ConnectionCoupling c = multimaximal_coupling(a, b);
            const Rational abs_diff = a > b ? a - b : b - a;
            CHECK(c.agreement() == 1 - abs_diff);
            CHECK(c.p10 + c.p11 == a);
            CHECK(c.p01 + c.p11 == b);
            CHECK(c.p00 >= 0);
            CHECK(c.p01 >= 0);
            CHECK(c.p10 >= 0);
            CHECK(c.p11 >= 0);
            CHECK((c.p01 == 0 || c.p10 == 0));
            const int lo = std::max(0, ia + ib - d), hi = std::min(ia, ib);
            for (int it = lo; it <= hi; ++it) {
                const Rational t = frac(it, d);
                const Rational agreement_at_t = (1 - a - b + t) + t;
                CHECK(c.agreement() >= agreement_at_t);
            }
        }
    }
}

TEST_CASE("connection vector pairs each content's two recordings") {
    const auto v = connection_vector(preset("example2"));
    REQUIRE(v.size() == 3);
    // contents 1 and 2 have equal marginals 1/2 in both contexts
    for (int j : {0, 1}) {
        CHECK(v[j].p00 == frac(1, 2));
        CHECK(v[j].p01 == 0);
        CHECK(v[j].p10 == 0);
        CHECK(v[j].p11 == frac(1, 2));
    }
    // content 3: 7/16 in context 3 (first) vs 1/2 in context 2 (second)
    CHECK(v[2].p00 == frac(1, 2));
    CHECK(v[2].p01 == frac(1, 16));
    CHECK(v[2].p10 == 0);
    CHECK(v[2].p11 == frac(7, 16));
}

TEST_CASE("consistent systems have diagonal connection couplings") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto s = random_consistent_system({3, seed, 16});
        for (const auto& c : connection_vector(s)) {
            CHECK(c.p01 == 0);
            CHECK(c.p10 == 0);
        }
    }
}
