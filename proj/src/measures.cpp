#include "cycontext/measures.hpp"

#include "cycontext/coupling.hpp"
#include "cycontext/vectors.hpp"

#include <utility>

namespace cycontext {

namespace {

Rational sparse_event_mass(const std::map<AtomIndex, Rational>& weights, const EventLabel& e,
                           int rank) {
    Rational s(0);
    for (const auto& [atom, wt] : weights) {
        if (atom_satisfies(atom, e, rank)) s += wt;
    }
    return s;
}

Rational sparse_total(const std::map<AtomIndex, Rational>& weights) {
    Rational s(0);
    for (const auto& [atom, wt] : weights) s += wt;
    return s;
}

}  // namespace

Rational SignedMeasure::total_mass() const { return sparse_total(weights); }

Rational SignedMeasure::l1_norm() const {
    Rational s(0);
    for (const auto& [atom, wt] : weights) s += abs(wt);
    return s;
}

Rational SignedMeasure::negative_mass() const {
    Rational s(0);
    for (const auto& [atom, wt] : weights) {
        if (wt < 0) s -= wt;
    }
    return s;
}

Rational DefectiveMeasure::total_mass() const { return sparse_total(weights); }

bool is_noncontextual(const CyclicSystem& system) { return proper_coupling_exists(system); }

Cnt3Result cnt3(const CyclicSystem& system) {
    MinNegativeMassSolution sol = solve_min_negative_mass(system);
    if (!sol.feasible) {
        throw internal_consistency_error("signed-measure program must always be feasible");
    }
    if (!sol.certificate.verified) {
        throw internal_consistency_error("signed-measure optimum failed its dual certificate");
    }
    Cnt3Result out;
    out.value = 2 * sol.negative_mass;
    out.measure.rank = system.rank();
    out.measure.weights = std::move(sol.weights);
    out.certificate = std::move(sol.certificate);
    return out;
}

CntfResult cntf(const CyclicSystem& system) {
    MaxDefectiveMassSolution sol = solve_max_defective_mass(system);
    if (!sol.certificate.verified) {
        throw internal_consistency_error("defective-measure optimum failed its dual certificate");
    }
    CntfResult out;
    out.value = 1 - sol.total_mass;
    out.measure.rank = system.rank();
    out.measure.weights = std::move(sol.weights);
    out.certificate = std::move(sol.certificate);
    return out;
}

bool in_pyramid(const std::map<AtomIndex, Rational>& x, const CyclicSystem& system) {
    const AtomIndex limit = AtomIndex(1) << (2 * system.rank());
    for (const auto& [atom, wt] : x) {
        if (atom >= limit) {
            throw std::invalid_argument("atom index out of range for the system's rank");
        }
    }
    ProbabilityVectorFull full = build_full_vector(system);
    for (std::size_t k = 0; k < full.labels.size(); ++k) {
        if (!(sparse_event_mass(x, full.labels[k], system.rank()) <= full.values[k])) {
            return false;
        }
    }
    return sparse_total(x) <= 1;
}

namespace {

// Atoms satisfying connection event (content, r, s), in ascending index
// order: the two connection bits are fixed and a counter is spread over the
// remaining positions (order-preserving).
std::vector<AtomIndex> cell_atoms(int rank, int content, int r, int s) {
    const int bits = 2 * rank;
    const auto [rb, sb] = connection_bits(content, rank);
    std::vector<int> free_bits;
    for (int b = 0; b < bits; ++b) {
        if (b != rb && b != sb) free_bits.push_back(b);
    }
    const AtomIndex fixed =
        (AtomIndex(r) << rb) | (AtomIndex(s) << sb);
    std::vector<AtomIndex> out;
    out.reserve(std::size_t(1) << free_bits.size());
    for (AtomIndex c = 0; c < (AtomIndex(1) << free_bits.size()); ++c) {
        AtomIndex a = fixed;
        for (std::size_t i = 0; i < free_bits.size(); ++i) {
            a |= ((c >> i) & 1u) << free_bits[i];
        }
        out.push_back(a);
    }
    return out;
}

struct RestrictedHit {
    MinNegativeMassSolution sol;
    AtomIndex atom = 0;
};

// Scan connections whose coupling has Pr(first=1, second=0) = 0 and try each
// atom of that cell as the sole negative coordinate, accepting the first one
// whose restricted optimum is exactly `half`.
std::optional<RestrictedHit> search_zero_cells(const CyclicSystem& system, const Rational& half) {
    const int n = system.rank();
    const std::vector<ConnectionCoupling> couplings = connection_vector(system);
    for (int j = 1; j <= n; ++j) {
        if (couplings[j - 1].p10 != 0) continue;
        for (AtomIndex v : cell_atoms(n, j, 1, 0)) {
            MinNegativeMassSolution sol = solve_min_negative_mass(system, v);
            if (sol.feasible && sol.negative_mass == half && sol.certificate.verified) {
                return RestrictedHit{std::move(sol), v};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

SingleNegativeWitness cnt3_single_negative(const CyclicSystem& system) {
    Cnt3Result base = cnt3(system);
    if (base.value == 0) {
        throw std::invalid_argument(
            "system admits a proper coupling; no negative component is needed");
    }
    const Rational half = base.value / 2;
    const int n = system.rank();

    SingleNegativeWitness out;
    out.measure.rank = n;

    std::optional<RestrictedHit> hit = search_zero_cells(system, half);
    if (hit) {
        out.measure.weights = std::move(hit->sol.weights);
        out.negative_atom = hit->atom;
        out.certificate = std::move(hit->sol.certificate);
    } else {
        // Every coupling has Pr(first=1, second=0) > 0; complementing one
        // content reverses that inequality for its connection. The witness
        // maps back through the same complement, which flips the two bits of
        // content 1.
        CyclicSystem flipped = system.relabel_content(1);
        std::optional<RestrictedHit> mapped = search_zero_cells(flipped, half);
        if (!mapped) {
            throw internal_consistency_error(
                "no single-negative coordinate attains half the contextuality value");
        }
        const auto [b0, b1] = connection_bits(1, n);
        const AtomIndex mask = (AtomIndex(1) << b0) | (AtomIndex(1) << b1);
        for (const auto& [atom, wt] : mapped->sol.weights) {
            out.measure.weights[atom ^ mask] = wt;
        }
        out.negative_atom = mapped->atom ^ mask;
        out.certificate = std::move(mapped->sol.certificate);
        // The certificate above lives in the complemented coordinates;
        // re-check the mapped measure against this system directly.
        ProbabilityVectorReduced reduced = build_reduced_vector(system);
        for (std::size_t k = 0; k < reduced.labels.size(); ++k) {
            if (sparse_event_mass(out.measure.weights, reduced.labels[k], n) !=
                reduced.values[k]) {
                throw internal_consistency_error(
                    "complement-mapped witness fails the reduced event rows");
            }
        }
        if (sparse_total(out.measure.weights) != 1) {
            throw internal_consistency_error("complement-mapped witness has wrong total mass");
        }
    }

    int negatives = 0;
    for (const auto& [atom, wt] : out.measure.weights) {
        if (wt < 0) {
            ++negatives;
            if (atom != out.negative_atom || wt != -half) {
                throw internal_consistency_error("negative component misplaced or mis-sized");
            }
        }
    }
    if (negatives != 1) {
        throw internal_consistency_error("witness does not have exactly one negative component");
    }

    const std::vector<ConnectionCoupling> couplings = connection_vector(system);
    bool on_zero_cell = false;
    for (int j = 1; j <= n && !on_zero_cell; ++j) {
        const ConnectionCoupling& c = couplings[j - 1];
        const Rational* cells[4] = {&c.p00, &c.p01, &c.p10, &c.p11};
        for (int r = 0; r <= 1 && !on_zero_cell; ++r) {
            for (int s = 0; s <= 1 && !on_zero_cell; ++s) {
                if (*cells[2 * r + s] != 0) continue;
                if (atom_satisfies(out.negative_atom, EventLabel::connection(j, r, s), n)) {
                    on_zero_cell = true;
                }
            }
        }
    }
    if (!on_zero_cell) {
        throw internal_consistency_error(
            "negative atom does not sit on a zero-probability connection cell");
    }
    return out;
}

WitnessReduction defective_coupling_from_witness(const CyclicSystem& system,
                                                 const SingleNegativeWitness& witness) {
    const int n = system.rank();
    if (witness.measure.rank != n) {
        throw std::invalid_argument("witness rank does not match the system");
    }
    auto neg_it = witness.measure.weights.find(witness.negative_atom);
    if (neg_it == witness.measure.weights.end() || !(neg_it->second < 0)) {
        throw std::invalid_argument("witness lacks a negative component at its recorded atom");
    }
    const Rational neg = -neg_it->second;  // half the contextuality value

    std::map<AtomIndex, Rational> w = witness.measure.weights;
    w.erase(witness.negative_atom);

    ExcessRemovalSolution sol = solve_excess_removal(system, w, witness.negative_atom);
    if (!sol.feasible) {
        throw internal_consistency_error("excess removal infeasible though x = w is a solution");
    }
    if (!sol.certificate.verified) {
        throw internal_consistency_error("excess-removal optimum failed its dual certificate");
    }

    std::map<AtomIndex, Rational> z = w;
    for (const auto& [atom, wt] : sol.removal) z[atom] -= wt;
    for (auto it = z.begin(); it != z.end();) {
        it = it->second == 0 ? z.erase(it) : std::next(it);
    }
    for (const auto& [atom, wt] : z) {
        if (wt < 0) {
            throw internal_consistency_error("capped removal left a negative entry");
        }
    }

    if (sol.removed_mass != Rational(2 * n - 1) * neg) {
        throw internal_consistency_error(
            "removed mass differs from (2n-1) times half the contextuality value");
    }
    // ‖y − z‖₁ accumulates |y_a − z_a| over the union of supports.
    Rational diff_norm(0);
    {
        std::map<AtomIndex, Rational> diff = witness.measure.weights;
        for (const auto& [atom, wt] : z) diff[atom] -= wt;
        for (const auto& [atom, wt] : diff) diff_norm += abs(wt);
    }
    if (diff_norm != Rational(n) * (2 * neg)) {
        throw internal_consistency_error("witness pair violates the n-times-CNT3 distance");
    }
    for (const auto& [atom, wt] : z) {
        auto it = witness.measure.weights.find(atom);
        Rational y_abs = it == witness.measure.weights.end() ? Rational(0) : abs(it->second);
        if (!(y_abs >= wt)) {
            throw internal_consistency_error("defective measure exceeds the witness in magnitude");
        }
    }

    WitnessReduction out;
    out.measure.rank = n;
    out.measure.weights = std::move(z);
    out.removed_mass = sol.removed_mass;
    out.certificate = std::move(sol.certificate);
    return out;
}

MeasureReport verify_proportionality(const CyclicSystem& system, bool include_witnesses) {
    MeasureReport report;
    report.rank = system.rank();
    Cnt3Result c3 = cnt3(system);
    CntfResult cf = cntf(system);
    report.noncontextual = is_noncontextual(system);
    report.cnt3_value = c3.value;
    report.cntf_value = cf.value;
    report.proportionality_holds = cf.value == Rational(system.rank() - 1) * c3.value;
    if (report.noncontextual != (c3.value == 0) || report.noncontextual != (cf.value == 0)) {
        throw internal_consistency_error(
            "noncontextuality test disagrees with a zero contextuality measure");
    }
    if (include_witnesses) {
        report.signed_witness = std::move(c3.measure);
        report.defective_witness = std::move(cf.measure);
    }
    return report;
}

}  // namespace cycontext
