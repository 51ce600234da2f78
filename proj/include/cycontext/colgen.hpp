#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cycontext/atoms.hpp"
#include "cycontext/lp.hpp"
#include "cycontext/rational.hpp"
#include "cycontext/system.hpp"

namespace cycontext {

// Linear objective over atoms: value of an atom is the sum of the weights of
// the events it satisfies.  A nonempty `banned` marks events whose satisfying
// atoms are excluded from the search domain (their weights are ignored).
struct AtomObjective {
    int rank = 0;
    std::vector<EventLabel> labels;
    std::vector<Rational> weights;
    std::vector<char> banned;
};

struct AtomSearchResult {
    bool found = false;
    AtomIndex atom = 0;
    Rational value;
};

// Exact optimum of the objective over all 2^(2 rank) atoms (minus bans), by
// dynamic programming around the cycle of variable bits.  Ties are broken
// toward the smallest atom index.  `exclude` removes one further atom from
// the domain.
AtomSearchResult max_atom(const AtomObjective& objective,
                          std::optional<AtomIndex> exclude = std::nullopt);
AtomSearchResult min_atom(const AtomObjective& objective,
                          std::optional<AtomIndex> exclude = std::nullopt);

// Objective value of one atom; nullopt if the atom satisfies a banned event.
std::optional<Rational> evaluate_atom(const AtomObjective& objective, AtomIndex atom);

// Exact dual certificate of an atom-program optimum.  `row_duals` has one
// entry per event row plus a trailing entry for the unit-mass row, in the
// natural sign convention of the program it came from.  `verified` reports
// that primal feasibility, dual sign and feasibility conditions (the latter
// over the whole atom universe, via a final pricing pass), and equality of
// the primal and dual objectives were all re-checked exactly.
struct AtomLpCertificate {
    std::vector<Rational> row_duals;
    bool verified = false;
};

// min Σ y₋  s.t.  M y = p*, Σ y = 1, y = y₊ − y₋, y₊, y₋ ≥ 0
// over the reduced event rows of the system.  With `restrict_negative_to`
// set, y₋ exists only at that atom and y₊ is excluded there, so the signed
// measure is forced to take its only possible negative value at that atom;
// the restricted program may be infeasible.
struct MinNegativeMassSolution {
    bool feasible = false;
    Rational negative_mass;
    std::map<AtomIndex, Rational> weights;  // y = y₊ − y₋, zero entries dropped
    AtomLpCertificate certificate;
};
MinNegativeMassSolution solve_min_negative_mass(
    const CyclicSystem& system, std::optional<AtomIndex> restrict_negative_to = std::nullopt);

// max Σ z  s.t.  M z ≤ p, Σ z ≤ 1, z ≥ 0  over the full event rows.
// Zero-probability rows are eliminated up front and their satisfying atoms
// banned; the returned certificate covers the eliminated rows too.
struct MaxDefectiveMassSolution {
    Rational total_mass;
    std::map<AtomIndex, Rational> weights;
    AtomLpCertificate certificate;
};
MaxDefectiveMassSolution solve_max_defective_mass(const CyclicSystem& system);

// Whether a proper probability measure reproduces the reduced event rows,
// i.e. the system admits a coupling agreeing with all bunches and all
// multimaximal connection couplings.
bool proper_coupling_exists(const CyclicSystem& system);

// min Σ x  s.t.  M (w − x) ≤ p, Σ (w − x) ≤ 1, 0 ≤ x ≤ w, x_v = 0
// over the full event rows: the least mass to remove from the defective
// measure w, never touching atom v, to bring it under the probability
// vector.  Removal is capped at the mass w actually carries, so the
// variables range over supp(w) \ {v} and rows w does not already exceed
// are dropped up front.
struct ExcessRemovalSolution {
    bool feasible = false;
    Rational removed_mass;
    std::map<AtomIndex, Rational> removal;
    AtomLpCertificate certificate;
};
ExcessRemovalSolution solve_excess_removal(const CyclicSystem& system,
                                           const std::map<AtomIndex, Rational>& w, AtomIndex v);

}  // namespace cycontext
