#pragma once

#include "cycontext/system.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cycontext {

/// One complete value assignment to the 2n variables of a coupling of a
/// rank-n system, encoded in the bits of an integer. Bit k (bit 0 = least
/// significant) is the value of variable k in the canonical order
/// (S_1^1, S_2^1, S_2^2, S_3^2, ..., S_n^n, S_1^n): context-major, within
/// context (first slot, second slot).
using AtomIndex = std::uint64_t;

/// Bit position of the first-slot variable of context i (1-based).
inline int first_slot_bit(int context) { return 2 * (context - 1); }
/// Bit position of the second-slot variable of context i (1-based).
inline int second_slot_bit(int context) { return 2 * (context - 1) + 1; }

/// Bit positions of the two instances of content j: first element = the
/// variable recorded in context j (first slot), second element = the one
/// recorded in context j-1 (second slot of the preceding context).
inline std::pair<int, int> connection_bits(int content, int rank) {
    return {2 * (content - 1), content == 1 ? 2 * rank - 1 : 2 * (content - 1) - 1};
}

inline int atom_bit(AtomIndex atom, int bit) { return static_cast<int>((atom >> bit) & 1u); }

/// Row label of the incidence matrices: one probability event of the system.
struct EventLabel {
    enum class Kind { marginal, bunch, connection };
    Kind kind;
    int index;  // context for marginal/bunch, content for connection (1-based)
    // marginal: slot + r (value). bunch: (r,s) = values of (S_i^i, S_{i+1}^i).
    // connection: (r,s) = values of (S_j^j, S_j^{j-1}).
    Slot slot = Slot::first;
    int r = 0;
    int s = 0;

    static EventLabel marginal(int context, Slot slot, int value);
    static EventLabel bunch(int context, int r, int s);
    static EventLabel connection(int content, int r, int s);

    std::string describe() const;
};

bool atom_satisfies(AtomIndex atom, const EventLabel& event, int rank);

/// The 12n row labels of the full incidence matrix, in the frozen order:
/// marginal block (context-major; first slot value 0, value 1, second slot
/// value 0, value 1), bunch block (context-major, (r,s) = 00,01,10,11),
/// connection block (content-major, same (r,s) order).
std::vector<EventLabel> full_event_labels(int rank);

/// The 4n row labels of the reduced incidence matrix: value-1 marginals
/// (context-major, first then second slot), then the (1,1) bunch events,
/// then the (1,1) connection events.
std::vector<EventLabel> reduced_event_labels(int rank);

}  // namespace cycontext
