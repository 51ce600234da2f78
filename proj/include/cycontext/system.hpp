#pragma once

#include "cycontext/rational.hpp"

#include <vector>

namespace cycontext {

/// Joint distribution of the two binary variables measured in one context.
/// Coordinate convention: p_ab = Pr(first variable = a, second variable = b),
/// where "first" is the variable whose content index equals the context index
/// and "second" is the one with the cyclically following content.
struct BunchDistribution {
    Rational p00, p01, p10, p11;

    Rational first_marginal() const { return p10 + p11; }   // Pr(first = 1)
    Rational second_marginal() const { return p01 + p11; }  // Pr(second = 1)

    /// True iff all four cells lie in [0,1] and sum to exactly 1.
    bool valid() const;
};

enum class Slot { first, second };

/// A cyclic system of binary random variables: n contexts, each measuring
/// two contents, every content shared by exactly two adjacent contexts.
/// Contexts and contents are indexed 1..n throughout. Immutable once built.
class CyclicSystem {
  public:
    /// Validates rank >= 2, matching bunch count, and every bunch being a
    /// proper distribution. Throws std::invalid_argument otherwise.
    CyclicSystem(int rank, std::vector<BunchDistribution> bunches);

    int rank() const { return rank_; }
    const BunchDistribution& bunch(int context) const;
    const std::vector<BunchDistribution>& bunches() const { return bunches_; }

    /// Pr of the indicated variable of context `context` being 1.
    Rational marginal(int context, Slot slot) const;

    /// Cyclic successor / predecessor of a 1-based index.
    int next(int index) const { return index == rank_ ? 1 : index + 1; }
    int prev(int index) const { return index == 1 ? rank_ : index - 1; }

    /// True iff every content has identical distributions in its two contexts.
    bool is_consistently_connected() const;

    /// Returns the system with both variables of content `content` replaced
    /// by their 0/1 complements. An involution; contextuality measures are
    /// invariant under it.
    CyclicSystem relabel_content(int content) const;

  private:
    int rank_;
    std::vector<BunchDistribution> bunches_;
};

// Free-function spellings matching the operation names used elsewhere.
inline CyclicSystem new_system(int rank, std::vector<BunchDistribution> bunches) {
    return CyclicSystem(rank, std::move(bunches));
}
inline Rational marginal(const CyclicSystem& s, int context, Slot slot) {
    return s.marginal(context, slot);
}
inline bool is_consistently_connected(const CyclicSystem& s) {
    return s.is_consistently_connected();
}
inline CyclicSystem relabel_content(const CyclicSystem& s, int content) {
    return s.relabel_content(content);
}

}  // namespace cycontext
