#include "kkm/linprog.hpp"

#include <cstddef>

namespace kkm {

namespace {

// Dense simplex tableau over exact rationals. Columns 0..ncols-1 are
// variables, column ncols holds the right-hand side. basis[i] is the basic
// variable of row i. rhs is kept nonnegative throughout.
struct Tableau {
    std::size_t ncols = 0;
    std::vector<std::vector<Rat>> rows;
    std::vector<std::size_t> basis;

    void pivot(std::size_t r, std::size_t c) {
        Rat inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            Rat factor = rows[i][c];
            if (factor == 0) continue;
            for (std::size_t j = 0; j <= ncols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        basis[r] = c;
    }
};

enum class CoreStatus { Optimal, Unbounded };

// Maximize cost . x from the current basic feasible point. Bland's rule for
// both the entering and the leaving variable guarantees termination.
CoreStatus simplex_core(Tableau& t, const std::vector<Rat>& cost) {
    for (;;) {
        // Reduced costs from scratch; the instances are tiny.
        std::size_t enter = t.ncols;
        for (std::size_t j = 0; j < t.ncols; ++j) {
            Rat rc = cost[j];
            for (std::size_t i = 0; i < t.rows.size(); ++i)
                rc -= cost[t.basis[i]] * t.rows[i][j];
            if (rc > 0) {
                enter = j;
                break;
            }
        }
        if (enter == t.ncols) return CoreStatus::Optimal;

        std::size_t leave = t.rows.size();
        Rat best;
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            if (t.rows[i][enter] <= 0) continue;
            Rat ratio = t.rows[i][t.ncols] / t.rows[i][enter];
            if (leave == t.rows.size() || ratio < best ||
                (ratio == best && t.basis[i] < t.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == t.rows.size()) return CoreStatus::Unbounded;
        t.pivot(leave, enter);
    }
}

}  // namespace

LpResult lp_max(const std::vector<Rat>& objective,
                const std::vector<LpConstraint>& constraints) {
    const std::size_t nvars = objective.size();
    for (const auto& c : constraints)
        if (c.coeffs.size() != nvars) throw Error("lp_max: constraint dimension mismatch");

    const std::size_t m = constraints.size();

    // Column layout: original vars, one slack/surplus per inequality row,
    // then artificials.
    std::size_t nslack = 0;
    for (const auto& c : constraints)
        if (c.rel != Rel::Eq) ++nslack;

    std::vector<std::vector<Rat>> raw(m);
    std::vector<bool> needs_artificial(m, false);
    std::vector<std::size_t> slack_of_row(m, 0);
    std::size_t slack_col = nvars;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        std::vector<Rat> row(nvars + nslack + 1);
        for (std::size_t j = 0; j < nvars; ++j) row[j] = c.coeffs[j];
        row[nvars + nslack] = c.rhs;
        Rel rel = c.rel;
        if (row[nvars + nslack] < 0) {
            for (auto& x : row) x = -x;
            rel = (rel == Rel::Le) ? Rel::Ge : (rel == Rel::Ge ? Rel::Le : Rel::Eq);
        }
        if (rel == Rel::Le) {
            slack_of_row[i] = slack_col;
            row[slack_col++] = 1;
        } else if (rel == Rel::Ge) {
            row[slack_col++] = -1;
            needs_artificial[i] = true;
        } else {
            needs_artificial[i] = true;
        }
        raw[i] = std::move(row);
    }

    std::size_t nartificial = 0;
    for (bool b : needs_artificial)
        if (b) ++nartificial;

    Tableau t;
    t.ncols = nvars + nslack + nartificial;
    t.rows.resize(m);
    t.basis.resize(m);
    std::size_t art_col = nvars + nslack;
    for (std::size_t i = 0; i < m; ++i) {
        t.rows[i].assign(t.ncols + 1, Rat(0));
        for (std::size_t j = 0; j < nvars + nslack; ++j) t.rows[i][j] = raw[i][j];
        t.rows[i][t.ncols] = raw[i][nvars + nslack];
        if (needs_artificial[i]) {
            t.rows[i][art_col] = 1;
            t.basis[i] = art_col++;
        } else {
            t.basis[i] = slack_of_row[i];
        }
    }

    if (nartificial > 0) {
        std::vector<Rat> phase1(t.ncols, Rat(0));
        for (std::size_t j = nvars + nslack; j < t.ncols; ++j) phase1[j] = -1;
        simplex_core(t, phase1);
        Rat infeas = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (t.basis[i] >= nvars + nslack) infeas += t.rows[i][t.ncols];
        if (infeas != 0) return {LpStatus::Infeasible, std::nullopt, Rat(0)};

        // Pivot any artificial still in the basis onto a real column, or drop
        // the (redundant) row.
        for (std::size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < nvars + nslack) {
                ++i;
                continue;
            }
            std::size_t c = nvars + nslack;
            for (std::size_t j = 0; j < nvars + nslack; ++j)
                if (t.rows[i][j] != 0) {
                    c = j;
                    break;
                }
            if (c < nvars + nslack) {
                t.pivot(i, c);
                ++i;
            } else {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        // Forget the artificial columns.
        for (auto& row : t.rows) {
            row.erase(row.begin() + static_cast<std::ptrdiff_t>(nvars + nslack),
                      row.begin() + static_cast<std::ptrdiff_t>(t.ncols));
        }
        t.ncols = nvars + nslack;
    }

    std::vector<Rat> cost(t.ncols, Rat(0));
    for (std::size_t j = 0; j < nvars; ++j) cost[j] = objective[j];
    CoreStatus cs = simplex_core(t, cost);
    if (cs == CoreStatus::Unbounded) return {LpStatus::Unbounded, std::nullopt, Rat(0)};

    std::vector<Rat> sol(nvars, Rat(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] < nvars) sol[t.basis[i]] = t.rows[i][t.ncols];
    Rat obj = 0;
    for (std::size_t j = 0; j < nvars; ++j) obj += objective[j] * sol[j];
    return {LpStatus::Feasible, std::move(sol), std::move(obj)};
}

std::optional<std::vector<Rat>> in_convex_hull(const RatPoint& p,
                                               const std::vector<RatPoint>& generators) {
    if (generators.empty()) throw Error("in_convex_hull: no generators");
    for (const auto& g : generators)
        if (g.dim() != p.dim()) throw Error("in_convex_hull: dimension mismatch");

    const std::size_t n = generators.size();
    std::vector<LpConstraint> cons;
    cons.reserve(p.dim() + 1);
    {
        LpConstraint sum1;
        sum1.coeffs.assign(n, Rat(1));
        sum1.rel = Rel::Eq;
        sum1.rhs = 1;
        cons.push_back(std::move(sum1));
    }
    for (std::size_t t = 0; t < p.dim(); ++t) {
        LpConstraint c;
        c.coeffs.resize(n);
        for (std::size_t i = 0; i < n; ++i) c.coeffs[i] = generators[i][t];
        c.rel = Rel::Eq;
        c.rhs = p[t];
        cons.push_back(std::move(c));
    }
    LpResult r = lp_max(std::vector<Rat>(n, Rat(0)), cons);
    if (r.status != LpStatus::Feasible) return std::nullopt;
    return r.solution;
}

}  // namespace kkm
