#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "cycontext/colgen.hpp"
#include "cycontext/rational.hpp"
#include "cycontext/system.hpp"

namespace cycontext {

// A computed result contradicts an exactly provable property (failed dual
// certificate, unattained witness bound, mismatched cross-checks).  Reaching
// this is a defect in the program, never in the input.
class internal_consistency_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Sparse signed measure over the 2^(2 rank) atoms; absent atoms carry zero.
struct SignedMeasure {
    int rank = 0;
    std::map<AtomIndex, Rational> weights;

    Rational total_mass() const;
    Rational l1_norm() const;
    Rational negative_mass() const;  // sum of -w over negative entries
};

// Sparse subprobability measure dominated by the full event vector.
struct DefectiveMeasure {
    int rank = 0;
    std::map<AtomIndex, Rational> weights;

    Rational total_mass() const;
};

// Whether a proper coupling reproduces all bunches and all multimaximal
// connection couplings.
bool is_noncontextual(const CyclicSystem& system);

// value = ‖y*‖₁ − 1 = 2 · (least negative mass of a signed measure
// reproducing the reduced event vector with total mass 1).
struct Cnt3Result {
    Rational value;
    SignedMeasure measure;
    AtomLpCertificate certificate;
};
Cnt3Result cnt3(const CyclicSystem& system);

// value = 1 − (largest total mass of a nonnegative vector dominated by the
// full event vector with total mass at most 1).
struct CntfResult {
    Rational value;
    DefectiveMeasure measure;
    AtomLpCertificate certificate;
};
CntfResult cntf(const CyclicSystem& system);

// Membership in the dominance pyramid: M(.) x ≤ p(.) on every full event row
// and total mass at most 1.  x is sparse over atoms; indices must fit the
// system's rank.
bool in_pyramid(const std::map<AtomIndex, Rational>& x, const CyclicSystem& system);

// Optimal signed measure with exactly one strictly negative component, of
// value −CNT₃/2, placed at an atom of a zero-probability cell of some
// connection coupling.  Throws std::invalid_argument for noncontextual input
// and internal_consistency_error if no candidate atom attains the bound.
struct SingleNegativeWitness {
    SignedMeasure measure;
    AtomIndex negative_atom = 0;
    AtomLpCertificate certificate;
};
SingleNegativeWitness cnt3_single_negative(const CyclicSystem& system);

// From a single-negative witness y*: zero its negative atom v, then remove
// the least mass x* (never touching v) that brings the rest under the full
// event vector.  Returns z* = w* − x*, an optimal defective measure, with
// removed mass (2n−1)·CNT₃/2 and ‖y* − z*‖₁ = n·CNT₃.
struct WitnessReduction {
    DefectiveMeasure measure;
    Rational removed_mass;
    AtomLpCertificate certificate;
};
WitnessReduction defective_coupling_from_witness(const CyclicSystem& system,
                                                 const SingleNegativeWitness& witness);

struct MeasureReport {
    int rank = 0;
    bool noncontextual = false;
    Rational cnt3_value;
    Rational cntf_value;
    bool proportionality_holds = false;
    std::optional<SignedMeasure> signed_witness;
    std::optional<DefectiveMeasure> defective_witness;
};

// Computes both measures and the noncontextuality test independently and
// cross-checks them: proportionality_holds records cntf = (rank−1)·cnt3, and
// disagreement between the three zero tests throws internal_consistency_error.
MeasureReport verify_proportionality(const CyclicSystem& system, bool include_witnesses = false);

}  // namespace cycontext
