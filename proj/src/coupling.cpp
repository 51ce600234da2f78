#include "cycontext/coupling.hpp"

#include <stdexcept>

namespace cycontext {

ConnectionCoupling multimaximal_coupling(const Rational& a, const Rational& b) {
    const Rational zero(0), one(1);
    if (a < zero || a > one || b < zero || b > one) {
        throw std::invalid_argument("coupling marginals must lie in [0,1]");
    }
    ConnectionCoupling t;
    t.p11 = a < b ? a : b;
    t.p00 = (one - a) < (one - b) ? (one - a) : (one - b);
    t.p10 = a - t.p11;
    t.p01 = b - t.p11;
    return t;
}

std::vector<ConnectionCoupling> connection_vector(const CyclicSystem& system) {
    std::vector<ConnectionCoupling> out;
    out.reserve(system.rank());
    for (int j = 1; j <= system.rank(); ++j) {
        out.push_back(multimaximal_coupling(system.marginal(j, Slot::first),
                                            system.marginal(system.prev(j), Slot::second)));
    }
    return out;
}

}  // namespace cycontext
