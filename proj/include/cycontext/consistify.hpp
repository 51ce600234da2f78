#pragma once

#include <vector>

#include "cycontext/rational.hpp"
#include "cycontext/system.hpp"

namespace cycontext {

// Where each context of a consistified system comes from: odd positions are
// the original bunches in order, even positions the connection couplings,
// interleaved as (bunch 1, connection 2, bunch 2, connection 3, ...,
// bunch n, connection 1).
struct ConsistificationMap {
    struct Source {
        enum class Kind { original_bunch, connection_coupling };
        Kind kind;
        int index;  // original context or content, 1-based
    };

    int original_rank = 0;
    int new_rank = 0;
    std::vector<Source> sources;  // entry k-1 describes new context k
};

struct ConsistificationResult {
    CyclicSystem system;
    ConsistificationMap map;
};

// Rank-2n system in which every original bunch and every multimaximal
// connection coupling becomes a context of its own. Each coupling context
// lists the earlier-recorded instance first, so its bunch is the coupling
// with its off-diagonal cells swapped. The result is always consistently
// connected and has the same contextuality status as the input.
ConsistificationResult consistify(const CyclicSystem& system);

struct ConsistificationRelations {
    int new_rank = 0;
    Rational cnt3_original;
    Rational cntf_original;
    Rational cnt3_consistified;
    Rational cntf_consistified;
    bool cntf_invariant = false;       // cntf(original) == cntf(consistified)
    bool cnt3_ratio_holds = false;     // cnt3(consistified)·(2n−1) == cnt3(original)·(n−1)
    bool consistified_consistent = false;
};

// Measures both systems independently and records whether the consistified
// system preserves the defect measure and scales the signed measure by
// (n−1)/(2n−1).
ConsistificationRelations verify_consistification_relations(const CyclicSystem& system);

}  // namespace cycontext
