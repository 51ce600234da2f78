#include "cycontext/vectors.hpp"

#include <stdexcept>

namespace cycontext {

namespace {

Rational event_probability(const CyclicSystem& system,
                           const std::vector<ConnectionCoupling>& couplings,
                           const EventLabel& e) {
    switch (e.kind) {
        case EventLabel::Kind::marginal: {
            Rational p = system.marginal(e.index, e.slot);
            return e.r == 1 ? p : Rational(1) - p;
        }
        case EventLabel::Kind::bunch: {
            const BunchDistribution& b = system.bunch(e.index);
            if (e.r == 0) return e.s == 0 ? b.p00 : b.p01;
            return e.s == 0 ? b.p10 : b.p11;
        }
        case EventLabel::Kind::connection: {
            const ConnectionCoupling& c = couplings[e.index - 1];
            if (e.r == 0) return e.s == 0 ? c.p00 : c.p01;
            return e.s == 0 ? c.p10 : c.p11;
        }
    }
    throw std::logic_error("unreachable event kind");
}

}  // namespace

ProbabilityVectorFull build_full_vector(const CyclicSystem& system) {
    ProbabilityVectorFull v;
    v.rank = system.rank();
    v.labels = full_event_labels(v.rank);
    auto couplings = connection_vector(system);
    v.values.reserve(v.labels.size());
    for (const EventLabel& e : v.labels) {
        v.values.push_back(event_probability(system, couplings, e));
    }
    return v;
}

ProbabilityVectorReduced build_reduced_vector(const CyclicSystem& system) {
    ProbabilityVectorReduced v;
    v.rank = system.rank();
    v.labels = reduced_event_labels(v.rank);
    auto couplings = connection_vector(system);
    v.values.reserve(v.labels.size());
    for (const EventLabel& e : v.labels) {
        v.values.push_back(event_probability(system, couplings, e));
    }
    return v;
}

IncidenceMatrix::IncidenceMatrix(std::vector<EventLabel> labels, int rank)
    : rank_(rank), labels_(std::move(labels)) {
    if (rank_ < 2 || rank_ > 12) {
        throw std::invalid_argument("explicit incidence matrix supports rank 2..12");
    }
    std::uint64_t atoms = num_atoms();
    blocks_per_row_ = static_cast<std::size_t>((atoms + 63) / 64);
    bits_.assign(labels_.size() * blocks_per_row_, 0);
    for (std::size_t u = 0; u < labels_.size(); ++u) {
        for (AtomIndex a = 0; a < atoms; ++a) {
            if (atom_satisfies(a, labels_[u], rank_)) {
                bits_[u * blocks_per_row_ + a / 64] |= std::uint64_t(1) << (a % 64);
            }
        }
    }
}

bool IncidenceMatrix::entry(std::size_t row, AtomIndex atom) const {
    return (bits_[row * blocks_per_row_ + atom / 64] >> (atom % 64)) & 1u;
}

std::uint64_t IncidenceMatrix::row_count(std::size_t row) const {
    std::uint64_t total = 0;
    for (std::size_t b = 0; b < blocks_per_row_; ++b) {
        total += __builtin_popcountll(bits_[row * blocks_per_row_ + b]);
    }
    return total;
}

std::vector<Rational> IncidenceMatrix::multiply(const std::vector<Rational>& weights) const {
    if (weights.size() != num_atoms()) {
        throw std::invalid_argument("weight vector length must equal the number of atoms");
    }
    std::vector<Rational> out(num_rows(), Rational(0));
    for (std::size_t u = 0; u < num_rows(); ++u) {
        for (std::size_t b = 0; b < blocks_per_row_; ++b) {
            std::uint64_t word = bits_[u * blocks_per_row_ + b];
            while (word) {
                int bit = __builtin_ctzll(word);
                word &= word - 1;
                out[u] += weights[b * 64 + bit];
            }
        }
    }
    return out;
}

std::vector<Rational> atom_column(AtomIndex atom, const std::vector<EventLabel>& labels, int rank) {
    std::vector<Rational> col;
    col.reserve(labels.size());
    for (const EventLabel& e : labels) {
        col.emplace_back(atom_satisfies(atom, e, rank) ? 1 : 0);
    }
    return col;
}

}  // namespace cycontext
