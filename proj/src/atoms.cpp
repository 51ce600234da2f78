#include "cycontext/atoms.hpp"

namespace cycontext {

EventLabel EventLabel::marginal(int context, Slot slot, int value) {
    EventLabel e;
    e.kind = Kind::marginal;
    e.index = context;
    e.slot = slot;
    e.r = value;
    return e;
}

EventLabel EventLabel::bunch(int context, int r, int s) {
    EventLabel e;
    e.kind = Kind::bunch;
    e.index = context;
    e.r = r;
    e.s = s;
    return e;
}

EventLabel EventLabel::connection(int content, int r, int s) {
    EventLabel e;
    e.kind = Kind::connection;
    e.index = content;
    e.r = r;
    e.s = s;
    return e;
}

std::string EventLabel::describe() const {
    switch (kind) {
        case Kind::marginal:
            return "Pr(context " + std::to_string(index) +
                   (slot == Slot::first ? " first" : " second") + " slot = " + std::to_string(r) +
                   ")";
        case Kind::bunch:
            return "Pr(bunch " + std::to_string(index) + " = (" + std::to_string(r) + "," +
                   std::to_string(s) + "))";
        case Kind::connection:
            return "Pr(connection " + std::to_string(index) + " coupling = (" + std::to_string(r) +
                   "," + std::to_string(s) + "))";
    }
    return "";
}

bool atom_satisfies(AtomIndex atom, const EventLabel& event, int rank) {
    switch (event.kind) {
        case EventLabel::Kind::marginal: {
            int bit = event.slot == Slot::first ? first_slot_bit(event.index)
                                                : second_slot_bit(event.index);
            return atom_bit(atom, bit) == event.r;
        }
        case EventLabel::Kind::bunch:
            return atom_bit(atom, first_slot_bit(event.index)) == event.r &&
                   atom_bit(atom, second_slot_bit(event.index)) == event.s;
        case EventLabel::Kind::connection: {
            auto [rb, sb] = connection_bits(event.index, rank);
            return atom_bit(atom, rb) == event.r && atom_bit(atom, sb) == event.s;
        }
    }
    return false;
}

std::vector<EventLabel> full_event_labels(int rank) {
    std::vector<EventLabel> labels;
    labels.reserve(12 * rank);
    for (int i = 1; i <= rank; ++i) {
        labels.push_back(EventLabel::marginal(i, Slot::first, 0));
        labels.push_back(EventLabel::marginal(i, Slot::first, 1));
        labels.push_back(EventLabel::marginal(i, Slot::second, 0));
        labels.push_back(EventLabel::marginal(i, Slot::second, 1));
    }
    for (int i = 1; i <= rank; ++i) {
        for (int r = 0; r <= 1; ++r) {
            for (int s = 0; s <= 1; ++s) {
                labels.push_back(EventLabel::bunch(i, r, s));
            }
        }
    }
    for (int j = 1; j <= rank; ++j) {
        for (int r = 0; r <= 1; ++r) {
            for (int s = 0; s <= 1; ++s) {
                labels.push_back(EventLabel::connection(j, r, s));
            }
        }
    }
    return labels;
}

std::vector<EventLabel> reduced_event_labels(int rank) {
    std::vector<EventLabel> labels;
    labels.reserve(4 * rank);
    for (int i = 1; i <= rank; ++i) {
        labels.push_back(EventLabel::marginal(i, Slot::first, 1));
        labels.push_back(EventLabel::marginal(i, Slot::second, 1));
    }
    for (int i = 1; i <= rank; ++i) {
        labels.push_back(EventLabel::bunch(i, 1, 1));
    }
    for (int j = 1; j <= rank; ++j) {
        labels.push_back(EventLabel::connection(j, 1, 1));
    }
    return labels;
}

}  // namespace cycontext
