#pragma once

#include "cycontext/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace cycontext {

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };
enum class VarDomain { nonnegative, free_variable };
enum class LpStatus { optimal, infeasible, unbounded };

struct LinearProgram {
    struct Row {
        std::vector<Rational> coeffs;
        Relation rel;
        Rational rhs;
    };

    Sense sense = Sense::minimize;
    std::vector<Rational> objective;
    std::vector<Row> rows;
    /// One entry per variable; empty means all nonnegative.
    std::vector<VarDomain> domains;
};

/// Dual convention. For minimize: duals y maximize bᵀy subject to Aᵀy ≤ c
/// (with equality on free variables), y ≥ 0 on ≥-rows, y ≤ 0 on ≤-rows,
/// free on =-rows. For maximize the inequalities reverse. At an optimum,
/// bᵀy = cᵀx exactly; certificate_verified records that this, together with
/// primal and dual feasibility, was checked in exact arithmetic.
struct LpSolution {
    LpStatus status;
    std::vector<Rational> values;
    Rational objective_value;
    std::vector<Rational> duals;
    bool certificate_verified = false;
};

/// Exact primal simplex over rationals. Enters on the most negative reduced
/// cost (lowest index on ties) and switches to Bland's cycle-free rule
/// whenever a long degenerate stall is detected, so termination is
/// guaranteed. Deterministic: identical programs yield identical solutions.
LpSolution solve(const LinearProgram& lp);

bool check_feasible(const LinearProgram& lp);

/// Re-checks an optimal solution against its program: primal feasibility,
/// dual feasibility, sign conditions, and exact objective equality.
bool verify_certificate(const LinearProgram& lp, const LpSolution& solution);

/// Role of the identity columns a SimplexTableau starts from. Artificial
/// columns exist only to reach feasibility: they are barred from entering
/// the basis and pinned at zero once phase one ends. Slack columns are
/// ordinary variables (usable when every row is a ≤-row with the slack
/// basis already feasible, so phase one is skipped entirely).
enum class IdentityColumns { artificial, slack };

/// Incremental kernel for min cᵀx, Ax = b, x ≥ 0 with b ≥ 0, used directly
/// by the column-generation drivers. The identity block occupies the first
/// m internal columns permanently; its tableau columns provide the running
/// basis inverse, so simplex multipliers are exact at any point. Columns may
/// be appended between optimize() calls and the solve resumes from the
/// current basis.
class SimplexTableau {
  public:
    explicit SimplexTableau(std::vector<Rational> rhs,
                            IdentityColumns identity = IdentityColumns::artificial);

    /// Appends a column given by sparse (row, coefficient) entries and its
    /// phase-2 cost. Returns the column's index (0-based, counting only
    /// appended columns).
    int add_column(const std::vector<std::pair<int, Rational>>& entries, Rational cost);

    /// Runs primal simplex until optimal, infeasible-so-far (phase-1 optimum
    /// positive with no entering column among current ones), or unbounded.
    LpStatus optimize();

    bool phase_one_active() const { return phase_one_; }
    const Rational& phase_one_objective() const { return obj1_; }
    const Rational& objective() const { return obj2_; }

    int num_rows() const { return m_; }
    int num_columns() const { return static_cast<int>(costs_.size()); }

    /// Value of an appended column in the current basic solution.
    Rational primal_value(int column) const;
    /// Appended columns currently basic, with their values.
    std::vector<std::pair<int, Rational>> basic_solution() const;

    /// Simplex multipliers for the active phase's costs (phase-1 costs while
    /// phase one is active, the real costs afterwards).
    std::vector<Rational> duals() const;

    /// c - πᵀa for a hypothetical column, using phase-appropriate costs
    /// (a hypothetical column has phase-1 cost zero).
    Rational reduced_cost_of(const std::vector<std::pair<int, Rational>>& entries,
                             const Rational& cost) const;

  private:
    int entering_column() const;
    int leaving_row(int tableau_col) const;
    void pivot(int row, int tableau_col);
    bool artificial_basic(int row) const {
        return identity_ == IdentityColumns::artificial && basis_[row] < m_;
    }

    IdentityColumns identity_;
    int m_;
    bool bland_mode_ = false;
    int stall_streak_ = 0;
    std::vector<std::vector<Rational>> tab_;  // m_ rows; columns: m_ artificials then appended
    std::vector<Rational> rhs_;
    std::vector<Rational> z1_, z2_;  // reduced-cost rows for phase-1 / phase-2 costs
    Rational obj1_, obj2_;
    std::vector<Rational> costs_;  // phase-2 costs of appended columns
    std::vector<int> basis_;       // tableau column index basic in each row
    bool phase_one_ = true;
};

}  // namespace cycontext
