#pragma once

#include <vector>

namespace trac {

// Equality-form linear program: maximize objective.x subject to
// rows[r].x = rhs[r] for every r and x >= 0.
struct LpProblem {
    int num_vars = 0;
    std::vector<double> objective;
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    double objective_value = 0.0;
    std::vector<double> x;
    std::vector<double> dual;          // one multiplier per input row
    double duality_gap = 0.0;          // |c.x - y.b| at termination
    double max_primal_violation = 0.0; // max |rows[r].x - rhs[r]|
    double max_dual_violation = 0.0;   // max_j max(0, c_j - (A^T y)_j)
    int pivots = 0;
};

// Dense two-phase simplex. Bland's smallest-index rule picks both the
// entering column and the ratio-test tie-break, which rules out cycling on
// the (heavily degenerate, redundant-row) constraint sets built by the
// certifier and makes every solve deterministic. Redundant equalities leave
// zero-level artificials in the basis; their rows are inert afterwards.
// Feasibility and reduced-cost tolerance: 1e-9.
LpSolution solve_lp(const LpProblem& problem);

} // namespace trac
