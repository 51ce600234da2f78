#include "cycontext/lp.hpp"

#include <stdexcept>


namespace cycontext {

SimplexTableau::SimplexTableau(std::vector<Rational> rhs, IdentityColumns identity)
    : identity_(identity), m_(static_cast<int>(rhs.size())), rhs_(std::move(rhs)), obj1_(0),
      obj2_(0) {
    for (const Rational& b : rhs_) {
        if (b < 0) throw std::invalid_argument("kernel right-hand side must be nonnegative");
        if (identity_ == IdentityColumns::artificial) obj1_ += b;
    }
    tab_.assign(m_, std::vector<Rational>(m_, Rational(0)));
    basis_.resize(m_);
    for (int r = 0; r < m_; ++r) {
        tab_[r][r] = 1;
        basis_[r] = r;
    }
    z1_.assign(m_, Rational(0));
    z2_.assign(m_, Rational(0));
    phase_one_ = obj1_ != 0;
}

int SimplexTableau::add_column(const std::vector<std::pair<int, Rational>>& entries,
                               Rational cost) {
    // Transformed column B^{-1}a, read through the artificial block.
    std::vector<Rational> v(m_, Rational(0));
    for (const auto& [row, coef] : entries) {
        if (row < 0 || row >= m_) throw std::out_of_range("column entry row out of range");
        if (coef == 0) continue;
        for (int i = 0; i < m_; ++i) {
            if (tab_[i][row] != 0) v[i] += coef * tab_[i][row];
        }
    }
    Rational rc1(0), rc2(cost);
    for (int i = 0; i < m_; ++i) {
        if (v[i] == 0) continue;
        if (basis_[i] < m_) {
            if (identity_ == IdentityColumns::artificial) rc1 -= v[i];
        } else {
            rc2 -= costs_[basis_[i] - m_] * v[i];
        }
    }
    for (int r = 0; r < m_; ++r) {
        tab_[r].push_back(std::move(v[r]));
    }
    z1_.push_back(std::move(rc1));
    z2_.push_back(std::move(rc2));
    costs_.push_back(std::move(cost));
    return static_cast<int>(costs_.size()) - 1;
}

int SimplexTableau::entering_column() const {
    const std::vector<Rational>& z = phase_one_ ? z1_ : z2_;
    int total = static_cast<int>(z.size());
    int start = identity_ == IdentityColumns::slack ? 0 : m_;
    if (bland_mode_) {
        for (int t = start; t < total; ++t) {
            if (z[t] < 0) return t;
        }
        return -1;
    }
    if (phase_one_) {
        for (int t = total - 1; t >= start; --t) {
            if (z[t] < 0) return t;
        }
        return -1;
    }
    int best = -1;
    for (int t = start; t < total; ++t) {
        if (z[t] < 0 && (best == -1 || z[t] < z[best])) best = t;
    }
    return best;
}

int SimplexTableau::leaving_row(int tableau_col) const {
    int best = -1;
    Rational best_ratio(0);
    for (int r = 0; r < m_; ++r) {
        const Rational& coef = tab_[r][tableau_col];
        bool candidate = false;
        Rational ratio(0);
        if (coef > 0) {
            ratio = rhs_[r] / coef;
            candidate = true;
        } else if (!phase_one_ && artificial_basic(r) && coef != 0) {
            // Artificial variables are fixed at zero once feasibility is
            // reached; any movement in their row caps the step at zero and
            // drives them out of the basis.
            candidate = true;
        }
        if (!candidate) continue;
        if (best == -1 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[best])) {
            best = r;
            best_ratio = ratio;
        }
    }
    return best;
}

void SimplexTableau::pivot(int row, int tableau_col) {
    int total = static_cast<int>(z1_.size());
    Rational piv = tab_[row][tableau_col];
    if (piv != 1) {
        for (int t = 0; t < total; ++t) {
            if (tab_[row][t] != 0) tab_[row][t] /= piv;
        }
        rhs_[row] /= piv;
    }
    const Rational theta = rhs_[row];
    const Rational f1 = z1_[tableau_col];
    const Rational f2 = z2_[tableau_col];
    obj1_ += f1 * theta;
    obj2_ += f2 * theta;
    // Degenerate-stall guard: after a long run of zero-step pivots, fall
    // back to Bland's rule (provably cycle-free) until progress resumes.
    if (theta == 0) {
        if (++stall_streak_ > 2 * m_ + 32) bland_mode_ = true;
    } else {
        stall_streak_ = 0;
        bland_mode_ = false;
    }
    for (int r = 0; r < m_; ++r) {
        if (r == row) continue;
        const Rational factor = tab_[r][tableau_col];
        if (factor == 0) continue;
        for (int t = 0; t < total; ++t) {
            if (tab_[row][t] != 0) tab_[r][t] -= factor * tab_[row][t];
        }
        if (rhs_[row] != 0) rhs_[r] -= factor * rhs_[row];
    }
    if (f1 != 0) {
        for (int t = 0; t < total; ++t) {
            if (tab_[row][t] != 0) z1_[t] -= f1 * tab_[row][t];
        }
    }
    if (f2 != 0) {
        for (int t = 0; t < total; ++t) {
            if (tab_[row][t] != 0) z2_[t] -= f2 * tab_[row][t];
        }
    }
    basis_[row] = tableau_col;
}

LpStatus SimplexTableau::optimize() {
    while (true) {
        if (phase_one_ && obj1_ == 0) phase_one_ = false;
        int t = entering_column();
        if (t < 0) {
            return phase_one_ ? LpStatus::infeasible : LpStatus::optimal;
        }
        int r = leaving_row(t);
        if (r < 0) {
            if (phase_one_) {
                throw std::logic_error("phase-1 objective unbounded below; kernel invariant broken");
            }
            return LpStatus::unbounded;
        }
        pivot(r, t);
    }
}

Rational SimplexTableau::primal_value(int column) const {
    int t = m_ + column;
    for (int r = 0; r < m_; ++r) {
        if (basis_[r] == t) return rhs_[r];
    }
    return Rational(0);
}

std::vector<std::pair<int, Rational>> SimplexTableau::basic_solution() const {
    std::vector<std::pair<int, Rational>> out;
    for (int r = 0; r < m_; ++r) {
        if (basis_[r] >= m_) out.emplace_back(basis_[r] - m_, rhs_[r]);
    }
    return out;
}

std::vector<Rational> SimplexTableau::duals() const {
    std::vector<Rational> pi(m_);
    for (int i = 0; i < m_; ++i) {
        pi[i] = phase_one_ ? Rational(1) - z1_[i] : -z2_[i];
    }
    return pi;
}

Rational SimplexTableau::reduced_cost_of(const std::vector<std::pair<int, Rational>>& entries,
                                         const Rational& cost) const {
    std::vector<Rational> pi = duals();
    Rational rc = phase_one_ ? Rational(0) : cost;
    for (const auto& [row, coef] : entries) {
        if (coef != 0 && pi[row] != 0) rc -= coef * pi[row];
    }
    return rc;
}

namespace {

void validate_program(const LinearProgram& lp) {
    std::size_t n = lp.objective.size();
    for (const auto& row : lp.rows) {
        if (row.coeffs.size() != n) {
            throw std::invalid_argument("constraint row length differs from objective length");
        }
    }
    if (!lp.domains.empty() && lp.domains.size() != n) {
        throw std::invalid_argument("variable domain list length differs from objective length");
    }
}

VarDomain domain_of(const LinearProgram& lp, std::size_t j) {
    return lp.domains.empty() ? VarDomain::nonnegative : lp.domains[j];
}

}  // namespace

LpSolution solve(const LinearProgram& lp) {
    validate_program(lp);
    const std::size_t n = lp.objective.size();
    const std::size_t m = lp.rows.size();
    const bool maximize = lp.sense == Sense::maximize;

    std::vector<bool> negated(m, false);
    std::vector<Rational> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        negated[i] = lp.rows[i].rhs < 0;
        rhs[i] = negated[i] ? -lp.rows[i].rhs : lp.rows[i].rhs;
    }
    SimplexTableau tab(rhs);

    auto effective_rel = [&](std::size_t i) {
        Relation rel = lp.rows[i].rel;
        if (!negated[i]) return rel;
        if (rel == Relation::less_equal) return Relation::greater_equal;
        if (rel == Relation::greater_equal) return Relation::less_equal;
        return Relation::equal;
    };

    // Variable columns (free variables split into positive/negative parts),
    // then slack/surplus columns row by row.
    std::vector<int> pos_col(n, -1), neg_col(n, -1);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::pair<int, Rational>> col;
        for (std::size_t i = 0; i < m; ++i) {
            const Rational& a = lp.rows[i].coeffs[j];
            if (a != 0) col.emplace_back(static_cast<int>(i), negated[i] ? -a : a);
        }
        Rational c = maximize ? -lp.objective[j] : lp.objective[j];
        pos_col[j] = tab.add_column(col, c);
        if (domain_of(lp, j) == VarDomain::free_variable) {
            for (auto& [row, coef] : col) coef = -coef;
            neg_col[j] = tab.add_column(col, -c);
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        Relation rel = effective_rel(i);
        if (rel == Relation::less_equal) {
            tab.add_column({{static_cast<int>(i), Rational(1)}}, Rational(0));
        } else if (rel == Relation::greater_equal) {
            tab.add_column({{static_cast<int>(i), Rational(-1)}}, Rational(0));
        }
    }

    LpStatus status = tab.optimize();
    LpSolution sol;
    sol.status = status;
    sol.objective_value = 0;
    if (status != LpStatus::optimal) return sol;

    sol.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        sol.values[j] = tab.primal_value(pos_col[j]);
        if (neg_col[j] >= 0) sol.values[j] -= tab.primal_value(neg_col[j]);
    }
    sol.objective_value = maximize ? -tab.objective() : tab.objective();
    std::vector<Rational> pi = tab.duals();
    sol.duals.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        sol.duals[i] = negated[i] ? -pi[i] : pi[i];
        if (maximize) sol.duals[i] = -sol.duals[i];
    }
    sol.certificate_verified = verify_certificate(lp, sol);
    return sol;
}

bool check_feasible(const LinearProgram& lp) {
    LinearProgram probe = lp;
    probe.sense = Sense::minimize;
    for (Rational& c : probe.objective) c = 0;
    return solve(probe).status == LpStatus::optimal;
}

bool verify_certificate(const LinearProgram& lp, const LpSolution& sol) {
    if (sol.status != LpStatus::optimal) return false;
    const std::size_t n = lp.objective.size();
    const std::size_t m = lp.rows.size();
    if (sol.values.size() != n || sol.duals.size() != m) return false;
    const bool maximize = lp.sense == Sense::maximize;

    for (std::size_t j = 0; j < n; ++j) {
        if (domain_of(lp, j) == VarDomain::nonnegative && sol.values[j] < 0) return false;
    }
    Rational primal_obj(0);
    for (std::size_t j = 0; j < n; ++j) primal_obj += lp.objective[j] * sol.values[j];
    if (primal_obj != sol.objective_value) return false;

    Rational dual_obj(0);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = lp.rows[i];
        Rational lhs(0);
        for (std::size_t j = 0; j < n; ++j) {
            if (row.coeffs[j] != 0) lhs += row.coeffs[j] * sol.values[j];
        }
        if (row.rel == Relation::less_equal && !(lhs <= row.rhs)) return false;
        if (row.rel == Relation::greater_equal && !(lhs >= row.rhs)) return false;
        if (row.rel == Relation::equal && lhs != row.rhs) return false;

        const Rational& y = sol.duals[i];
        if (row.rel == Relation::less_equal) {
            if (!maximize && y > 0) return false;
            if (maximize && y < 0) return false;
        } else if (row.rel == Relation::greater_equal) {
            if (!maximize && y < 0) return false;
            if (maximize && y > 0) return false;
        }
        dual_obj += y * row.rhs;
    }
    if (dual_obj != sol.objective_value) return false;

    for (std::size_t j = 0; j < n; ++j) {
        Rational t(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (lp.rows[i].coeffs[j] != 0) t += sol.duals[i] * lp.rows[i].coeffs[j];
        }
        if (domain_of(lp, j) == VarDomain::free_variable) {
            if (t != lp.objective[j]) return false;
        } else if (!maximize) {
            if (!(t <= lp.objective[j])) return false;
        } else {
            if (!(t >= lp.objective[j])) return false;
        }
    }
    return true;
}

}  // namespace cycontext
