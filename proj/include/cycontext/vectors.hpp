#pragma once

#include "cycontext/atoms.hpp"
#include "cycontext/coupling.hpp"
#include "cycontext/rational.hpp"
#include "cycontext/system.hpp"

#include <cstdint>
#include <vector>

namespace cycontext {

/// The 12n probabilities of a system, aligned with full_event_labels(rank):
/// per-variable marginals, bunch cell probabilities, and the multimaximal
/// connection coupling cell probabilities.
struct ProbabilityVectorFull {
    int rank;
    std::vector<EventLabel> labels;
    std::vector<Rational> values;
};

/// The 4n probabilities aligned with reduced_event_labels(rank): value-1
/// marginals, bunch (1,1) cells, connection coupling (1,1) cells.
struct ProbabilityVectorReduced {
    int rank;
    std::vector<EventLabel> labels;
    std::vector<Rational> values;
};

ProbabilityVectorFull build_full_vector(const CyclicSystem& system);
ProbabilityVectorReduced build_reduced_vector(const CyclicSystem& system);

/// 0/1 matrix with one row per event label and 2^{2n} atom columns; rows are
/// stored as bitsets packed into 64-bit blocks. Entry (u,v) = 1 iff atom v
/// satisfies event u. Intended for explicit work at small rank; the
/// column-generation path never materializes it.
class IncidenceMatrix {
  public:
    IncidenceMatrix(std::vector<EventLabel> labels, int rank);

    int rank() const { return rank_; }
    std::uint64_t num_atoms() const { return std::uint64_t(1) << (2 * rank_); }
    std::size_t num_rows() const { return labels_.size(); }
    const std::vector<EventLabel>& labels() const { return labels_; }

    bool entry(std::size_t row, AtomIndex atom) const;

    /// Number of ones in a row.
    std::uint64_t row_count(std::size_t row) const;

    /// Matrix-vector product over a dense weight vector of length 2^{2n}.
    std::vector<Rational> multiply(const std::vector<Rational>& weights) const;

  private:
    int rank_;
    std::vector<EventLabel> labels_;
    std::size_t blocks_per_row_;
    std::vector<std::uint64_t> bits_;
};

inline IncidenceMatrix build_incidence_matrix(std::vector<EventLabel> labels, int rank) {
    return IncidenceMatrix(std::move(labels), rank);
}

/// The 0/1 column of one atom under a list of event labels.
std::vector<Rational> atom_column(AtomIndex atom, const std::vector<EventLabel>& labels, int rank);

}  // namespace cycontext
