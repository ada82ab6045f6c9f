#include "trac/simplex.hpp"

#include <cmath>
#include <string>

#include "trac/errors.hpp"

namespace trac {

namespace {

constexpr double kTol = 1e-9;

class Tableau {
public:
    Tableau(const LpProblem& p)
        : m_(static_cast<int>(p.rows.size())),
          nv_(p.num_vars),
          width_(p.num_vars + static_cast<int>(p.rows.size()) + 1),
          cells_(static_cast<size_t>(m_) * width_, 0.0),
          basis_(m_),
          flipped_(m_, false) {
        for (int r = 0; r < m_; ++r) {
            const double flip = p.rhs[r] < 0.0 ? -1.0 : 1.0;
            flipped_[r] = p.rhs[r] < 0.0;
            for (int j = 0; j < nv_; ++j) at(r, j) = flip * p.rows[r][j];
            at(r, nv_ + r) = 1.0; // artificial
            rhs(r) = flip * p.rhs[r];
            basis_[r] = nv_ + r;
        }
    }

    double& at(int r, int c) { return cells_[static_cast<size_t>(r) * width_ + c]; }
    double at(int r, int c) const { return cells_[static_cast<size_t>(r) * width_ + c]; }
    double& rhs(int r) { return at(r, width_ - 1); }
    double rhs(int r) const { return at(r, width_ - 1); }

    int rows() const { return m_; }
    int num_vars() const { return nv_; }
    int basic(int r) const { return basis_[r]; }
    bool row_flipped(int r) const { return flipped_[r]; }

    void pivot(int row, int col) {
        const double inv = 1.0 / at(row, col);
        for (int c = 0; c < width_; ++c) at(row, c) *= inv;
        at(row, col) = 1.0;
        for (int r = 0; r < m_; ++r) {
            if (r == row) continue;
            const double factor = at(r, col);
            if (factor == 0.0) continue;
            for (int c = 0; c < width_; ++c) at(r, c) -= factor * at(row, c);
            at(r, col) = 0.0;
        }
        basis_[row] = col;
    }

    // Reduced cost of column `col` under costs `cost` (indexed over all
    // columns, artificials included). O(m), recomputed fresh per query so
    // rounding never accumulates in a cost row.
    double reduced_cost(const std::vector<double>& cost, int col) const {
        double zc = cost[col];
        for (int r = 0; r < m_; ++r) {
            const double coef = at(r, col);
            if (coef != 0.0) zc -= cost[basis_[r]] * coef;
        }
        return zc;
    }

    // One Bland step for maximization: enter the lowest-index column with
    // positive reduced cost among [0, limit), leave by min ratio with
    // lowest-basic-index ties. Returns +1 on a pivot, 0 at optimality,
    // -1 when the entering column is unbounded.
    int bland_step(const std::vector<double>& cost, int limit) {
        int enter = -1;
        for (int j = 0; j < limit; ++j) {
            if (reduced_cost(cost, j) > kTol) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return 0;

        int leave = -1;
        double best_ratio = 0.0;
        for (int r = 0; r < m_; ++r) {
            const double coef = at(r, enter);
            if (coef <= kTol) continue;
            const double ratio = rhs(r) / coef;
            if (leave < 0 || ratio < best_ratio - kTol ||
                (ratio < best_ratio + kTol && basis_[r] < basis_[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave < 0) return -1;
        pivot(leave, enter);
        return 1;
    }

private:
    int m_, nv_, width_;
    std::vector<double> cells_;
    std::vector<int> basis_;
    std::vector<bool> flipped_;
};

} // namespace

LpSolution solve_lp(const LpProblem& problem) {
    const int m = static_cast<int>(problem.rows.size());
    const int nv = problem.num_vars;
    if (nv <= 0 || static_cast<int>(problem.objective.size()) != nv ||
        problem.rhs.size() != problem.rows.size()) {
        throw InvalidScenarioError("solve_lp: inconsistent problem dimensions");
    }
    for (const auto& row : problem.rows) {
        if (static_cast<int>(row.size()) != nv)
            throw InvalidScenarioError("solve_lp: row width does not match num_vars");
    }

    Tableau tableau(problem);
    LpSolution sol;
    const int max_pivots = 1000 * (m + nv) + 10000;

    // Phase 1: drive the artificial variables to zero.
    std::vector<double> cost1(nv + m, 0.0);
    for (int j = nv; j < nv + m; ++j) cost1[j] = -1.0;
    for (;;) {
        if (sol.pivots > max_pivots) {
            sol.status = LpStatus::iteration_limit;
            return sol;
        }
        const int step = tableau.bland_step(cost1, nv + m);
        if (step == 0) break;
        if (step < 0) {
            // Phase-1 objective is bounded by construction; treat as failure.
            sol.status = LpStatus::iteration_limit;
            return sol;
        }
        ++sol.pivots;
    }
    double infeasibility = 0.0;
    double rhs_scale = 1.0;
    for (int r = 0; r < m; ++r) {
        rhs_scale = std::max(rhs_scale, std::fabs(problem.rhs[r]));
        if (tableau.basic(r) >= nv) infeasibility += tableau.rhs(r);
    }
    if (infeasibility > kTol * rhs_scale * (1 + m)) {
        sol.status = LpStatus::infeasible;
        return sol;
    }

    // Pivot zero-level artificials onto real columns before phase 2. Left in
    // the basis, an artificial can climb off zero through a negative entry in
    // an entering column (the ratio test only bounds positive entries), which
    // would let the iterate leave the original affine space. A row with no
    // usable real coefficient reduced to 0 = 0; its artificial stays basic and
    // the row is inert from here on. Each pass pivots at least one artificial
    // out, so the loop runs at most m times.
    for (bool purged = true; purged;) {
        purged = false;
        for (int r = 0; r < m; ++r) {
            if (tableau.basic(r) < nv) continue;
            int col = -1;
            double best = kTol;
            for (int j = 0; j < nv; ++j) {
                const double mag = std::fabs(tableau.at(r, j));
                if (mag > best) {
                    best = mag;
                    col = j;
                }
            }
            if (col >= 0) {
                tableau.pivot(r, col);
                ++sol.pivots;
                purged = true;
            }
        }
    }

    // Phase 2 over the original columns only. Any artificial still basic sits
    // on an inert 0 = 0 row whose real coefficients are all zero, so no
    // entering column can move it.
    std::vector<double> cost2(nv + m, 0.0);
    for (int j = 0; j < nv; ++j) cost2[j] = problem.objective[j];
    for (;;) {
        if (sol.pivots > max_pivots) {
            sol.status = LpStatus::iteration_limit;
            return sol;
        }
        const int step = tableau.bland_step(cost2, nv);
        if (step == 0) break;
        if (step < 0) {
            sol.status = LpStatus::unbounded;
            return sol;
        }
        ++sol.pivots;
    }

    sol.status = LpStatus::optimal;
    sol.x.assign(nv, 0.0);
    for (int r = 0; r < m; ++r) {
        if (tableau.basic(r) < nv) sol.x[tableau.basic(r)] = tableau.rhs(r);
    }
    sol.objective_value = 0.0;
    for (int j = 0; j < nv; ++j) sol.objective_value += problem.objective[j] * sol.x[j];

    // Dual multipliers from the artificial columns (they carry B^-1), with
    // the sign flips undone for rows whose rhs was negated.
    sol.dual.assign(m, 0.0);
    for (int r0 = 0; r0 < m; ++r0) {
        double y = 0.0;
        for (int r = 0; r < m; ++r) {
            const int b = tableau.basic(r);
            if (b < nv) y += problem.objective[b] * tableau.at(r, nv + r0);
        }
        sol.dual[r0] = tableau.row_flipped(r0) ? -y : y;
    }
    double dual_value = 0.0;
    for (int r = 0; r < m; ++r) dual_value += sol.dual[r] * problem.rhs[r];
    sol.duality_gap = std::fabs(dual_value - sol.objective_value);

    for (int r = 0; r < m; ++r) {
        double lhs = 0.0;
        for (int j = 0; j < nv; ++j) lhs += problem.rows[r][j] * sol.x[j];
        sol.max_primal_violation = std::max(sol.max_primal_violation, std::fabs(lhs - problem.rhs[r]));
    }
    for (int j = 0; j < nv; ++j) {
        double aty = 0.0;
        for (int r = 0; r < m; ++r) aty += problem.rows[r][j] * sol.dual[r];
        sol.max_dual_violation = std::max(sol.max_dual_violation, problem.objective[j] - aty);
    }
    sol.max_dual_violation = std::max(sol.max_dual_violation, 0.0);
    return sol;
}

} // namespace trac
