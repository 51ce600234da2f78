#include "cycontext/system.hpp"

#include <stdexcept>
#include <string>

namespace cycontext {

bool BunchDistribution::valid() const {
    const Rational zero(0), one(1);
    for (const Rational* p : {&p00, &p01, &p10, &p11}) {
        if (*p < zero || *p > one) return false;
    }
    return p00 + p01 + p10 + p11 == one;
}

CyclicSystem::CyclicSystem(int rank, std::vector<BunchDistribution> bunches)
    : rank_(rank), bunches_(std::move(bunches)) {
    if (rank_ < 2) {
        throw std::invalid_argument("cyclic system rank must be at least 2, got " +
                                    std::to_string(rank_));
    }
    if (static_cast<int>(bunches_.size()) != rank_) {
        throw std::invalid_argument("expected " + std::to_string(rank_) + " bunches, got " +
                                    std::to_string(bunches_.size()));
    }
    for (int i = 0; i < rank_; ++i) {
        if (!bunches_[i].valid()) {
            throw std::invalid_argument("bunch " + std::to_string(i + 1) +
                                        " is not a probability distribution");
        }
    }
}

const BunchDistribution& CyclicSystem::bunch(int context) const {
    if (context < 1 || context > rank_) {
        throw std::out_of_range("context index " + std::to_string(context) +
                                " outside 1.." + std::to_string(rank_));
    }
    return bunches_[context - 1];
}

Rational CyclicSystem::marginal(int context, Slot slot) const {
    const BunchDistribution& b = bunch(context);
    return slot == Slot::first ? b.first_marginal() : b.second_marginal();
}

bool CyclicSystem::is_consistently_connected() const {
    // Content j is measured first in context j and second in context j-1.
    for (int j = 1; j <= rank_; ++j) {
        if (marginal(j, Slot::first) != marginal(prev(j), Slot::second)) return false;
    }
    return true;
}

CyclicSystem CyclicSystem::relabel_content(int content) const {
    if (content < 1 || content > rank_) {
        throw std::out_of_range("content index " + std::to_string(content) +
                                " outside 1.." + std::to_string(rank_));
    }
    std::vector<BunchDistribution> flipped = bunches_;
    // First coordinate in context `content`:
    {
        BunchDistribution& b = flipped[content - 1];
        std::swap(b.p00, b.p10);
        std::swap(b.p01, b.p11);
    }
    // Second coordinate in the preceding context:
    {
        BunchDistribution& b = flipped[prev(content) - 1];
        std::swap(b.p00, b.p01);
        std::swap(b.p10, b.p11);
    }
    return CyclicSystem(rank_, std::move(flipped));
}

}  // namespace cycontext
