#include <doctest.h>

#include <random>
#include <set>

#include "cycontext/atoms.hpp"
#include "cycontext/generators.hpp"
#include "cycontext/vectors.hpp"
#include "test_support.hpp"

using namespace cycontext;
using testsupport::frac;

TEST_CASE("variable bit layout") {
    CHECK(first_slot_bit(1) == 0);
    CHECK(second_slot_bit(1) == 1);
    CHECK(first_slot_bit(3) == 4);
    CHECK(second_slot_bit(3) == 5);
    CHECK(connection_bits(1, 3) == std::pair<int, int>{0, 5});
    CHECK(connection_bits(2, 3) == std::pair<int, int>{2, 1});
    CHECK(connection_bits(3, 3) == std::pair<int, int>{4, 3});
    CHECK(connection_bits(1, 2) == std::pair<int, int>{0, 3});
}

TEST_CASE("event satisfaction by explicit bits") {
    // atom 3 = binary 0011: variables of context 1 are both 1, rest 0
    const AtomIndex atom = 3;
    CHECK(atom_satisfies(atom, EventLabel::marginal(1, Slot::first, 1), 2));
    CHECK(atom_satisfies(atom, EventLabel::marginal(1, Slot::second, 1), 2));
    CHECK(atom_satisfies(atom, EventLabel::marginal(2, Slot::first, 0), 2));
    CHECK(atom_satisfies(atom, EventLabel::bunch(1, 1, 1), 2));
    CHECK(atom_satisfies(atom, EventLabel::bunch(2, 0, 0), 2));
    CHECK_FALSE(atom_satisfies(atom, EventLabel::bunch(2, 1, 0), 2));
    // connection events read (value in own context, value in preceding one)
    CHECK(atom_satisfies(atom, EventLabel::connection(2, 0, 1), 2));
    CHECK_FALSE(atom_satisfies(atom, EventLabel::connection(2, 1, 0), 2));
    CHECK(atom_satisfies(atom, EventLabel::connection(1, 1, 0), 2));
}

TEST_CASE("label blocks have the frozen order and size") {
    const auto full = full_event_labels(3);
    REQUIRE(full.size() == 36);
    CHECK(full[0].kind == EventLabel::Kind::marginal);
    CHECK(full[0].index == 1);
    CHECK(full[0].slot == Slot::first);
    CHECK(full[0].r == 0);
    CHECK(full[11].index == 3);
    CHECK(full[12].kind == EventLabel::Kind::bunch);
    CHECK(full[12].r == 0);
    CHECK(full[12].s == 0);
    CHECK(full[24].kind == EventLabel::Kind::connection);
    CHECK(full[35].index == 3);
    CHECK(full[35].r == 1);
    CHECK(full[35].s == 1);

    const auto reduced = reduced_event_labels(3);
    REQUIRE(reduced.size() == 12);
    CHECK(reduced[0].kind == EventLabel::Kind::marginal);
    CHECK(reduced[0].r == 1);
    CHECK(reduced[6].kind == EventLabel::Kind::bunch);
    CHECK(reduced[9].kind == EventLabel::Kind::connection);

    std::set<std::string> names;
    for (const auto& l : full) names.insert(l.describe());
    CHECK(names.size() == full.size());
}

TEST_CASE("every atom satisfies one event per group") {
    for (int n : {2, 3}) {
        const auto labels = full_event_labels(n);
        for (AtomIndex v = 0; v < (AtomIndex(1) << (2 * n)); ++v) {
            int marg = 0, bunch = 0, conn = 0;
            for (const auto& l : labels) {
                if (!atom_satisfies(v, l, n)) continue;
                if (l.kind == EventLabel::Kind::marginal) ++marg;
                if (l.kind == EventLabel::Kind::bunch) ++bunch;
                if (l.kind == EventLabel::Kind::connection) ++conn;
            }
            CHECK(marg == 2 * n);
            CHECK(bunch == n);
            CHECK(conn == n);
        }
    }
}

TEST_CASE("probability vectors align with their labels") {
    const CyclicSystem s = preset("example2");
    const auto full = build_full_vector(s);
    REQUIRE(full.values.size() == 36);
    Rational bunch_total(0), conn_total(0);
    for (std::size_t k = 0; k < full.labels.size(); ++k) {
        const auto& l = full.labels[k];
        if (l.kind == EventLabel::Kind::bunch) bunch_total += full.values[k];
        if (l.kind == EventLabel::Kind::connection) conn_total += full.values[k];
        if (l.kind == EventLabel::Kind::marginal) {
            const Rational one = s.marginal(l.index, l.slot);
            CHECK(full.values[k] == (l.r == 1 ? one : 1 - one));
        }
    }
    CHECK(bunch_total == 3);
    CHECK(conn_total == 3);

    const auto reduced = build_reduced_vector(s);
    REQUIRE(reduced.values.size() == 12);
    CHECK(reduced.values[4] == frac(7, 16));   // context 3 first slot = 1
    CHECK(reduced.values[7] == frac(1, 8));    // bunch 2 cell (1,1)
    CHECK(reduced.values[11] == frac(7, 16));  // connection 3 cell (1,1)
}

TEST_CASE("incidence matrix matches direct satisfaction checks") {
    const int n = 2;
    const IncidenceMatrix m(full_event_labels(n), n);
    REQUIRE(m.num_rows() == 24);
    REQUIRE(m.num_atoms() == 16);
    for (std::size_t u = 0; u < m.num_rows(); ++u) {
        std::uint64_t count = 0;
        for (AtomIndex v = 0; v < m.num_atoms(); ++v) {
            CHECK(m.entry(u, v) == atom_satisfies(v, m.labels()[u], n));
            count += m.entry(u, v) ? 1 : 0;
        }
        CHECK(count == m.row_count(u));
    }
    const auto col = atom_column(5, m.labels(), n);
    for (std::size_t u = 0; u < m.num_rows(); ++u) {
        CHECK(col[u] == (m.entry(u, 5) ? 1 : 0));
    }
}

TEST_CASE("uniform atom weights reproduce the independent uniform marginal and bunch rows") {
    const int n = 3;
    const IncidenceMatrix m(full_event_labels(n), n);
    const std::vector<Rational> uniform(m.num_atoms(), frac(1, 64));
    const auto product = m.multiply(uniform);
    const auto expected = build_full_vector(preset("uniform-independent-3"));
    for (std::size_t k = 0; k < m.num_rows(); ++k) {
        if (m.labels()[k].kind == EventLabel::Kind::connection) {
            // the uniform coupling spreads each connection evenly; the
            // system's own connection coupling concentrates on agreement
            CHECK(product[k] == frac(1, 4));
        } else {
            CHECK(product[k] == expected.values[k]);
        }
    }
}

TEST_CASE("reduced incidence matrix has full row rank") {
    for (int n = 2; n <= 6; ++n) {
        const IncidenceMatrix m(reduced_event_labels(n), n);
        std::vector<std::vector<Rational>> rows(m.num_rows(),
                                                std::vector<Rational>(m.num_atoms()));
        for (std::size_t u = 0; u < m.num_rows(); ++u) {
            for (AtomIndex v = 0; v < m.num_atoms(); ++v) {
                rows[u][v] = m.entry(u, v) ? 1 : 0;
            }
        }
        CHECK(testsupport::exact_rank(std::move(rows)) == 4 * n);
    }
}

TEST_CASE("marginal rows are margins of the bunch rows for any weights") {
    const int n = 3;
    const IncidenceMatrix m(full_event_labels(n), n);
    std::mt19937_64 rng(2024);
    std::vector<Rational> h(m.num_atoms());
    for (auto& w : h) w = frac(static_cast<long long>(rng() % 17), 16);
    const auto y = m.multiply(h);
    const auto& labels = m.labels();
    auto value_at = [&](const EventLabel& want) {
        for (std::size_t k = 0; k < labels.size(); ++k) {
            const auto& l = labels[k];
            if (l.kind == want.kind && l.index == want.index && l.slot == want.slot &&
                l.r == want.r && l.s == want.s) {
                return y[k];
            }
        }
        REQUIRE(false);
        return Rational(0);
    };
    for (int i = 1; i <= n; ++i) {
        for (int val : {0, 1}) {
            CHECK(value_at(EventLabel::marginal(i, Slot::first, val)) ==
                  value_at(EventLabel::bunch(i, val, 0)) + value_at(EventLabel::bunch(i, val, 1)));
            CHECK(value_at(EventLabel::marginal(i, Slot::second, val)) ==
                  value_at(EventLabel::bunch(i, 0, val)) + value_at(EventLabel::bunch(i, 1, val)));
        }
    }
}
