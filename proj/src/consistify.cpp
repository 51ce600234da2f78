#include "cycontext/consistify.hpp"

#include "cycontext/coupling.hpp"
#include "cycontext/measures.hpp"

#include <utility>

namespace cycontext {

ConsistificationResult consistify(const CyclicSystem& system) {
    const int n = system.rank();
    const std::vector<ConnectionCoupling> couplings = connection_vector(system);

    std::vector<BunchDistribution> bunches;
    ConsistificationMap map;
    map.original_rank = n;
    map.new_rank = 2 * n;
    bunches.reserve(2 * n);
    map.sources.reserve(2 * n);
    for (int i = 1; i <= n; ++i) {
        bunches.push_back(system.bunch(i));
        map.sources.push_back({ConsistificationMap::Source::Kind::original_bunch, i});
        const int j = system.next(i);
        const ConnectionCoupling& c = couplings[j - 1];
        // First slot = the instance recorded in original context i, which is
        // the coupling's second slot: swap the off-diagonal cells.
        bunches.push_back({c.p00, c.p10, c.p01, c.p11});
        map.sources.push_back({ConsistificationMap::Source::Kind::connection_coupling, j});
    }
    return {CyclicSystem(2 * n, std::move(bunches)), std::move(map)};
}

ConsistificationRelations verify_consistification_relations(const CyclicSystem& system) {
    const int n = system.rank();
    ConsistificationResult cons = consistify(system);

    ConsistificationRelations out;
    out.new_rank = cons.map.new_rank;
    out.cnt3_original = cnt3(system).value;
    out.cntf_original = cntf(system).value;
    out.cnt3_consistified = cnt3(cons.system).value;
    out.cntf_consistified = cntf(cons.system).value;
    out.cntf_invariant = out.cntf_original == out.cntf_consistified;
    out.cnt3_ratio_holds =
        out.cnt3_consistified * (2 * n - 1) == out.cnt3_original * (n - 1);
    out.consistified_consistent = cons.system.is_consistently_connected();
    return out;
}

}  // namespace cycontext
