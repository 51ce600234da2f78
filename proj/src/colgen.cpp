#include "cycontext/colgen.hpp"

#include "cycontext/coupling.hpp"
#include "cycontext/vectors.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace cycontext {

namespace {

// Per-bit and per-edge weight tables of an AtomObjective, laid out along the
// cycle bunch-1, connection-2, bunch-2, ..., bunch-n, connection-1.
struct RingTables {
    int bits;
    std::vector<std::array<Rational, 2>> unary;
    std::vector<std::array<char, 2>> unary_ok;
    std::vector<std::array<std::array<Rational, 2>, 2>> bunch;   // [ctx-1][r][s]
    std::vector<std::array<std::array<char, 2>, 2>> bunch_ok;
    std::vector<std::array<std::array<Rational, 2>, 2>> conn;    // [content-1][r][s]
    std::vector<std::array<std::array<char, 2>, 2>> conn_ok;
};

RingTables compile_tables(const AtomObjective& o) {
    if (o.labels.size() != o.weights.size()) {
        throw std::invalid_argument("atom objective labels and weights differ in length");
    }
    if (!o.banned.empty() && o.banned.size() != o.labels.size()) {
        throw std::invalid_argument("atom objective ban list has wrong length");
    }
    RingTables t;
    t.bits = 2 * o.rank;
    t.unary.assign(t.bits, {Rational(0), Rational(0)});
    t.unary_ok.assign(t.bits, {1, 1});
    t.bunch.assign(o.rank, {{{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}});
    t.bunch_ok.assign(o.rank, {{{1, 1}, {1, 1}}});
    t.conn.assign(o.rank, {{{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}});
    t.conn_ok.assign(o.rank, {{{1, 1}, {1, 1}}});
    for (std::size_t k = 0; k < o.labels.size(); ++k) {
        const EventLabel& e = o.labels[k];
        bool ban = !o.banned.empty() && o.banned[k];
        switch (e.kind) {
            case EventLabel::Kind::marginal: {
                int bit = e.slot == Slot::first ? first_slot_bit(e.index) : second_slot_bit(e.index);
                if (ban) {
                    t.unary_ok[bit][e.r] = 0;
                } else {
                    t.unary[bit][e.r] += o.weights[k];
                }
                break;
            }
            case EventLabel::Kind::bunch:
                if (ban) {
                    t.bunch_ok[e.index - 1][e.r][e.s] = 0;
                } else {
                    t.bunch[e.index - 1][e.r][e.s] += o.weights[k];
                }
                break;
            case EventLabel::Kind::connection:
                if (ban) {
                    t.conn_ok[e.index - 1][e.r][e.s] = 0;
                } else {
                    t.conn[e.index - 1][e.r][e.s] += o.weights[k];
                }
                break;
        }
    }
    return t;
}

struct Cell {
    bool valid = false;
    Rational val;
    std::uint64_t mask = 0;
};

bool improves(bool maximize, const Rational& v, std::uint64_t mask, const Cell& incumbent) {
    if (!incumbent.valid) return true;
    if (maximize) {
        if (v > incumbent.val) return true;
        if (v < incumbent.val) return false;
    } else {
        if (v < incumbent.val) return true;
        if (v > incumbent.val) return false;
    }
    return mask < incumbent.mask;
}

// Dynamic program around the cycle, conditioning on the value of bit 0.
// forced: optional per-bit value restrictions in addition to the objective's
// own exclusions (used to carve out a single excluded atom).
AtomSearchResult ring_search(const RingTables& t, bool maximize,
                             const std::vector<std::array<char, 2>>* forced) {
    auto allowed = [&](int bit, int v) {
        return t.unary_ok[bit][v] && (forced == nullptr || (*forced)[bit][v]);
    };
    Cell best;
    for (int v0 = 0; v0 <= 1; ++v0) {
        if (!allowed(0, v0)) continue;
        std::array<Cell, 2> dp;
        dp[v0] = {true, t.unary[0][v0], static_cast<std::uint64_t>(v0)};
        for (int k = 1; k < t.bits; ++k) {
            std::array<Cell, 2> next;
            for (int v = 0; v <= 1; ++v) {
                if (!allowed(k, v)) continue;
                for (int u = 0; u <= 1; ++u) {
                    if (!dp[u].valid) continue;
                    const Rational* edge;
                    if (k % 2 == 1) {
                        int ctx = (k + 1) / 2;  // bits 2ctx-2, 2ctx-1
                        if (!t.bunch_ok[ctx - 1][u][v]) continue;
                        edge = &t.bunch[ctx - 1][u][v];
                    } else {
                        int content = k / 2 + 1;  // pairs bit k (r) with bit k-1 (s)
                        if (!t.conn_ok[content - 1][v][u]) continue;
                        edge = &t.conn[content - 1][v][u];
                    }
                    Rational cand = dp[u].val + *edge + t.unary[k][v];
                    std::uint64_t mask = dp[u].mask | (static_cast<std::uint64_t>(v) << k);
                    if (improves(maximize, cand, mask, next[v])) {
                        next[v] = {true, std::move(cand), mask};
                    }
                }
            }
            dp = next;
        }
        for (int v = 0; v <= 1; ++v) {
            if (!dp[v].valid) continue;
            if (!t.conn_ok[0][v0][v]) continue;  // closing edge: content 1, r = bit 0, s = last bit
            Rational total = dp[v].val + t.conn[0][v0][v];
            if (improves(maximize, total, dp[v].mask, best)) {
                best = {true, std::move(total), dp[v].mask};
            }
        }
    }
    AtomSearchResult out;
    if (best.valid) {
        out.found = true;
        out.atom = best.mask;
        out.value = best.val;
    }
    return out;
}

AtomSearchResult extremal_atom(const AtomObjective& o, bool maximize,
                               std::optional<AtomIndex> exclude) {
    RingTables t = compile_tables(o);
    AtomSearchResult base = ring_search(t, maximize, nullptr);
    if (!base.found || !exclude || base.atom != *exclude) return base;
    // The optimum is the excluded atom: the runner-up differs from it in at
    // least one bit, so take the best result over all single-bit restrictions.
    AtomSearchResult best;
    for (int bit = 0; bit < t.bits; ++bit) {
        std::vector<std::array<char, 2>> forced(t.bits, {1, 1});
        forced[bit][(*exclude >> bit) & 1] = 0;
        AtomSearchResult r = ring_search(t, maximize, &forced);
        if (!r.found) continue;
        Cell incumbent{best.found, best.value, best.atom};
        if (improves(maximize, r.value, r.atom, incumbent)) best = r;
    }
    return best;
}

}  // namespace

AtomSearchResult max_atom(const AtomObjective& objective, std::optional<AtomIndex> exclude) {
    return extremal_atom(objective, true, exclude);
}

AtomSearchResult min_atom(const AtomObjective& objective, std::optional<AtomIndex> exclude) {
    return extremal_atom(objective, false, exclude);
}

std::optional<Rational> evaluate_atom(const AtomObjective& objective, AtomIndex atom) {
    Rational total(0);
    for (std::size_t k = 0; k < objective.labels.size(); ++k) {
        if (!atom_satisfies(atom, objective.labels[k], objective.rank)) continue;
        if (!objective.banned.empty() && objective.banned[k]) return std::nullopt;
        total += objective.weights[k];
    }
    return total;
}

namespace {

constexpr int kMaxRounds = 1 << 22;

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

void drop_zeros(std::map<AtomIndex, Rational>& weights) {
    for (auto it = weights.begin(); it != weights.end();) {
        it = it->second == 0 ? weights.erase(it) : std::next(it);
    }
}

}  // namespace

MinNegativeMassSolution solve_min_negative_mass(const CyclicSystem& system,
                                                std::optional<AtomIndex> restrict_negative_to) {
    const int n = system.rank();
    const std::vector<EventLabel> labels = reduced_event_labels(n);
    const std::vector<Rational> p = build_reduced_vector(system).values;
    const int mass_row = static_cast<int>(labels.size());

    std::vector<Rational> rhs = p;
    rhs.emplace_back(1);
    SimplexTableau tab(rhs);

    std::map<std::pair<AtomIndex, int>, int> col_ids;
    std::vector<std::pair<AtomIndex, int>> col_info;
    auto add_atom_column = [&](AtomIndex a, int sign) {
        auto key = std::make_pair(a, sign);
        if (col_ids.count(key)) {
            throw std::logic_error("pricing proposed a column already in the master");
        }
        std::vector<std::pair<int, Rational>> entries;
        for (std::size_t k = 0; k < labels.size(); ++k) {
            if (atom_satisfies(a, labels[k], n)) {
                entries.emplace_back(static_cast<int>(k), Rational(sign));
            }
        }
        entries.emplace_back(mass_row, Rational(sign));
        int id = tab.add_column(entries, sign > 0 ? Rational(0) : Rational(1));
        col_ids[key] = id;
        col_info.emplace_back(a, sign);
    };

    if (restrict_negative_to) add_atom_column(*restrict_negative_to, -1);

    AtomObjective obj;
    obj.rank = n;
    obj.labels = labels;

    LpStatus status = LpStatus::infeasible;
    AtomSearchResult last_max, last_min;
    Rational last_pi_mass;
    // Positive columns alone decide feasibility of a proper coupling, so
    // negative columns are only priced once the positive-only master has
    // stalled infeasible.  When it instead reaches an optimum, every cost in
    // the master is zero, the duals vanish, and the minimum is zero.
    bool price_negative = false;
    for (int round = 0;; ++round) {
        if (round > kMaxRounds) throw std::logic_error("column generation failed to terminate");
        status = tab.optimize();
        std::vector<Rational> pi = tab.duals();
        const Rational pi_mass = pi[mass_row];
        obj.weights.assign(pi.begin(), pi.begin() + labels.size());

        bool added = false;
        AtomSearchResult mx = max_atom(obj, restrict_negative_to);
        if (mx.found && mx.value + pi_mass > 0) {
            add_atom_column(mx.atom, +1);
            added = true;
        }
        AtomSearchResult mn;
        if (!restrict_negative_to && price_negative) {
            mn = min_atom(obj);
            const Rational neg_cost = tab.phase_one_active() ? Rational(0) : Rational(1);
            if (mn.found && neg_cost + mn.value + pi_mass < 0) {
                add_atom_column(mn.atom, -1);
                added = true;
            }
        }
        if (!added) {
            if (!restrict_negative_to && !price_negative) {
                if (status == LpStatus::infeasible) {
                    price_negative = true;
                    continue;
                }
                mn = min_atom(obj);
            }
            last_max = mx;
            last_min = mn;
            last_pi_mass = pi_mass;
            break;
        }
    }

    MinNegativeMassSolution out;
    if (status == LpStatus::infeasible) return out;
    if (status != LpStatus::optimal) {
        throw std::logic_error("negative-mass program cannot be unbounded");
    }
    out.feasible = true;
    out.negative_mass = tab.objective();
    for (const auto& [col, value] : tab.basic_solution()) {
        if (value == 0) continue;
        const auto& [atom, sign] = col_info[col];
        out.weights[atom] += sign > 0 ? value : -value;
    }
    drop_zeros(out.weights);

    std::vector<Rational> pi = tab.duals();
    out.certificate.row_duals = pi;
    bool ok = true;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (sparse_event_mass(out.weights, labels[k], n) != p[k]) ok = false;
    }
    if (sparse_total(out.weights) != 1) ok = false;
    Rational negative(0);
    for (const auto& [atom, wt] : out.weights) {
        if (wt < 0) negative -= wt;
    }
    if (negative != out.negative_mass) ok = false;
    // Dual feasibility over the whole atom universe, via the final pricing
    // pass: no positive column prices below 0, no negative column below 0.
    if (last_max.found && last_max.value + last_pi_mass > 0) ok = false;
    if (!restrict_negative_to) {
        if (last_min.found && Rational(1) + last_min.value + last_pi_mass < 0) ok = false;
    } else {
        AtomObjective final_obj = obj;
        std::optional<Rational> g = evaluate_atom(final_obj, *restrict_negative_to);
        if (!g || Rational(1) + *g + last_pi_mass < 0) ok = false;
    }
    Rational dual_obj(0);
    for (std::size_t k = 0; k < labels.size(); ++k) dual_obj += pi[k] * p[k];
    dual_obj += pi[mass_row];
    if (dual_obj != out.negative_mass) ok = false;
    out.certificate.verified = ok;
    return out;
}

MaxDefectiveMassSolution solve_max_defective_mass(const CyclicSystem& system) {
    const int n = system.rank();
    const std::vector<EventLabel> labels = full_event_labels(n);
    const std::vector<Rational> p = build_full_vector(system).values;

    std::vector<char> banned(labels.size(), 0);
    std::vector<int> row_of(labels.size(), -1);
    std::vector<Rational> rhs;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (p[k] == 0) {
            banned[k] = 1;
        } else {
            row_of[k] = static_cast<int>(rhs.size());
            rhs.push_back(p[k]);
        }
    }
    const int mass_row = static_cast<int>(rhs.size());
    rhs.emplace_back(1);
    SimplexTableau tab(rhs, IdentityColumns::slack);

    std::map<AtomIndex, int> col_ids;
    std::vector<AtomIndex> col_info;
    auto add_atom_column = [&](AtomIndex a) {
        if (col_ids.count(a)) {
            throw std::logic_error("pricing proposed a column already in the master");
        }
        std::vector<std::pair<int, Rational>> entries;
        for (std::size_t k = 0; k < labels.size(); ++k) {
            if (row_of[k] >= 0 && atom_satisfies(a, labels[k], n)) {
                entries.emplace_back(row_of[k], Rational(1));
            }
        }
        entries.emplace_back(mass_row, Rational(1));
        col_ids[a] = tab.add_column(entries, Rational(-1));
        col_info.push_back(a);
    };

    AtomObjective obj;
    obj.rank = n;
    obj.labels = labels;
    obj.banned = banned;

    AtomSearchResult last_max;
    Rational last_pi_mass;
    for (int round = 0;; ++round) {
        if (round > kMaxRounds) throw std::logic_error("column generation failed to terminate");
        LpStatus status = tab.optimize();
        if (status != LpStatus::optimal) {
            throw std::logic_error("defective-mass program must stay feasible and bounded");
        }
        std::vector<Rational> pi = tab.duals();
        const Rational pi_mass = pi[mass_row];
        obj.weights.assign(labels.size(), Rational(0));
        for (std::size_t k = 0; k < labels.size(); ++k) {
            if (row_of[k] >= 0) obj.weights[k] = pi[row_of[k]];
        }
        AtomSearchResult mx = max_atom(obj);
        if (mx.found && mx.value + pi_mass > Rational(-1)) {
            add_atom_column(mx.atom);
            continue;
        }
        last_max = mx;
        last_pi_mass = pi_mass;
        break;
    }

    MaxDefectiveMassSolution out;
    out.total_mass = -tab.objective();
    for (const auto& [col, value] : tab.basic_solution()) {
        if (value == 0) continue;
        out.weights[col_info[col]] += value;
    }
    drop_zeros(out.weights);

    std::vector<Rational> pi = tab.duals();
    // Dual in the maximization convention: λ = −π on kept rows, 1 on
    // eliminated zero rows (which keeps every excluded atom's dual row
    // satisfied), −π on the mass row.
    out.certificate.row_duals.assign(labels.size() + 1, Rational(1));
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (row_of[k] >= 0) out.certificate.row_duals[k] = -pi[row_of[k]];
    }
    out.certificate.row_duals[labels.size()] = -pi[mass_row];

    bool ok = true;
    for (const auto& [atom, wt] : out.weights) {
        if (wt < 0) ok = false;
    }
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (!(sparse_event_mass(out.weights, labels[k], n) <= p[k])) ok = false;
    }
    if (!(sparse_total(out.weights) <= 1)) ok = false;
    if (sparse_total(out.weights) != out.total_mass) ok = false;
    for (const Rational& lambda : out.certificate.row_duals) {
        if (lambda < 0) ok = false;
    }
    if (last_max.found && last_max.value + last_pi_mass > Rational(-1)) ok = false;
    Rational dual_obj(0);
    for (std::size_t k = 0; k < labels.size(); ++k) {
        dual_obj += out.certificate.row_duals[k] * p[k];
    }
    dual_obj += out.certificate.row_duals[labels.size()];
    if (dual_obj != out.total_mass) ok = false;
    out.certificate.verified = ok;
    return out;
}

bool proper_coupling_exists(const CyclicSystem& system) {
    const int n = system.rank();
    const std::vector<EventLabel> labels = reduced_event_labels(n);
    const std::vector<Rational> p = build_reduced_vector(system).values;
    const int mass_row = static_cast<int>(labels.size());

    std::vector<Rational> rhs = p;
    rhs.emplace_back(1);
    SimplexTableau tab(rhs);

    std::map<AtomIndex, int> col_ids;
    AtomObjective obj;
    obj.rank = n;
    obj.labels = labels;
    for (int round = 0;; ++round) {
        if (round > kMaxRounds) throw std::logic_error("column generation failed to terminate");
        LpStatus status = tab.optimize();
        if (status == LpStatus::optimal) return true;
        if (status != LpStatus::infeasible) {
            throw std::logic_error("feasibility program cannot be unbounded");
        }
        std::vector<Rational> pi = tab.duals();
        const Rational pi_mass = pi[mass_row];
        obj.weights.assign(pi.begin(), pi.begin() + labels.size());
        AtomSearchResult mx = max_atom(obj);
        if (!mx.found || !(mx.value + pi_mass > 0)) return false;
        if (col_ids.count(mx.atom)) {
            throw std::logic_error("pricing proposed a column already in the master");
        }
        std::vector<std::pair<int, Rational>> entries;
        for (std::size_t k = 0; k < labels.size(); ++k) {
            if (atom_satisfies(mx.atom, labels[k], n)) {
                entries.emplace_back(static_cast<int>(k), Rational(1));
            }
        }
        entries.emplace_back(mass_row, Rational(1));
        col_ids[mx.atom] = tab.add_column(entries, Rational(0));
    }
}

ExcessRemovalSolution solve_excess_removal(const CyclicSystem& system,
                                           const std::map<AtomIndex, Rational>& w, AtomIndex v) {
    const int n = system.rank();
    const std::vector<EventLabel> labels = full_event_labels(n);
    const std::vector<Rational> p = build_full_vector(system).values;

    std::vector<AtomIndex> vars;
    for (const auto& [atom, mass] : w) {
        if (atom != v && mass > 0) vars.push_back(atom);
    }

    // Rows where w already overshoots; removal must close exactly this gap.
    std::vector<int> kept_rows;
    LinearProgram lp;
    lp.objective.assign(vars.size(), Rational(1));
    for (std::size_t k = 0; k < labels.size(); ++k) {
        Rational excess = sparse_event_mass(w, labels[k], n) - p[k];
        if (!(excess > 0)) continue;
        LinearProgram::Row row;
        row.rel = Relation::greater_equal;
        row.rhs = std::move(excess);
        row.coeffs.assign(vars.size(), Rational(0));
        for (std::size_t j = 0; j < vars.size(); ++j) {
            if (atom_satisfies(vars[j], labels[k], n)) row.coeffs[j] = 1;
        }
        lp.rows.push_back(std::move(row));
        kept_rows.push_back(static_cast<int>(k));
    }
    const Rational mass_excess = sparse_total(w) - 1;
    const bool mass_kept = mass_excess > 0;
    if (mass_kept) {
        lp.rows.push_back({std::vector<Rational>(vars.size(), Rational(1)),
                           Relation::greater_equal, mass_excess});
    }
    const std::size_t num_demand_rows = lp.rows.size();

    ExcessRemovalSolution out;
    out.certificate.row_duals.assign(labels.size() + 1, Rational(0));
    if (num_demand_rows == 0) {
        out.feasible = true;
        out.removed_mass = 0;
        out.certificate.verified = true;
        return out;
    }

    for (std::size_t j = 0; j < vars.size(); ++j) {
        LinearProgram::Row cap;
        cap.rel = Relation::less_equal;
        cap.rhs = w.at(vars[j]);
        cap.coeffs.assign(vars.size(), Rational(0));
        cap.coeffs[j] = 1;
        lp.rows.push_back(std::move(cap));
    }

    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::optimal) return out;
    out.feasible = true;
    out.removed_mass = sol.objective_value;
    for (std::size_t j = 0; j < vars.size(); ++j) {
        if (sol.values[j] != 0) out.removal[vars[j]] = sol.values[j];
    }
    for (std::size_t r = 0; r < kept_rows.size(); ++r) {
        out.certificate.row_duals[kept_rows[r]] = sol.duals[r];
    }
    if (mass_kept) out.certificate.row_duals[labels.size()] = sol.duals[kept_rows.size()];

    bool ok = sol.certificate_verified;
    std::map<AtomIndex, Rational> z = w;
    for (const auto& [atom, wt] : out.removal) {
        if (wt < 0 || atom == v || !(wt <= w.at(atom))) ok = false;
        z[atom] -= wt;
    }
    for (const auto& [atom, wt] : z) {
        if (wt < 0) ok = false;
    }
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (!(sparse_event_mass(z, labels[k], n) <= p[k])) ok = false;
    }
    if (!(sparse_total(z) <= 1)) ok = false;
    for (std::size_t r = 0; r < num_demand_rows; ++r) {
        if (sol.duals[r] < 0) ok = false;  // duals of ≥-rows in a minimization
    }
    out.certificate.verified = ok;
    return out;
}

}  // namespace cycontext
