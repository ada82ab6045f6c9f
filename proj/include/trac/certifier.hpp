#pragma once

#include <vector>

#include "trac/simplex.hpp"
#include "trac/temporal.hpp"

namespace trac {

// Joint outcome table P(a, b | A_i, B_j) for one scenario size: 2^(n-1)
// Alice settings x n Bob settings x 4 outcome pairs, stored flat.
struct JointTable {
    int n = 0;
    std::vector<double> p;

    static int index(int n, int i, int j, int a, int b) {
        return ((i * n + j) * 2 + a) * 2 + b;
    }
    double at(int i, int j, int a, int b) const { return p[index(n, i, j, a, b)]; }
    double& at(int i, int j, int a, int b) { return p[index(n, i, j, a, b)]; }
    int alice_settings() const { return 1 << (n - 1); }
    int cells() const { return 4 * n * (1 << (n - 1)); }
};

// Table realized by a strategy's sequential measurements.
JointTable joint_table(const TemporalStrategy& strategy);

// K of a table: sum_ij sign(i,j) sum_ab (-1)^(a xor b) P(a,b|i,j).
double table_k(const JointTable& table);

// Largest violation of the certification constraint set by `table`:
// normalization per setting pair, nonnegativity, outcome marginals of Bob
// independent of Alice's setting, outcome marginals of Alice independent of
// Bob's setting (when with_arrow), and K = k_target.
double max_constraint_violation(const JointTable& table, double k_target,
                                bool with_arrow = true);

struct CellIndex {
    int i = 0; // Alice setting, 0-based
    int j = 0; // Bob setting, 0-based
    int a = 0;
    int b = 0;
};

struct CertificationResult {
    int n = 0;
    double k_value = 0.0;
    double p_star = 0.0;
    double min_entropy = 0.0; // -log2(p_star)
    JointTable table;         // the adversary's optimal table for argmax_cell
    CellIndex argmax_cell;
    double max_duality_gap = 0.0;        // over the per-cell solves
    std::vector<CellIndex> skipped_cells; // conditional solves with empty cone
};

// The polytope behind certification, as an equality-form LP over the
// 4 n 2^(n-1) cell probabilities:
//   - per-setting normalization,
//   - P(b|A_i,B_j) = P(b|A_1,B_j) for i > 0 (statistics of the later
//     measurement blind to the earlier setting),
//   - P(a|A_i,B_j) = P(a|A_i,B_1) for j > 0 (earlier statistics blind to the
//     later setting; on by default, kept toggleable for sensitivity checks),
//   - K = k_target, or K - slack = k_target with slack >= 0 when geq_k.
// Objective starts at zero; certify() swaps in one cell at a time.
LpProblem build_lp(int n, double k_target, bool with_arrow = true, bool geq_k = false);

// Adversarial guessing probability: maximize each cell over the polytope and
// take the worst cell. p_star >= 1/4 always holds (normalization); it is
// reported as computed, never clamped.
CertificationResult certify(int n, double k_target, bool with_arrow = true,
                            bool geq_k = false);

struct SweepReport {
    int n = 0;
    std::vector<CertificationResult> points;
    double alpha_fit = 0.0; // least-squares p_star ~ beta + alpha k
    double beta_fit = 0.0;
    double alpha_claimed = 0.0; // published line for n in {2,3,4}, else NaN
    double beta_claimed = 0.0;
    double max_residual = 0.0; // data vs fitted line
    // Two-anchor audit lines through (classical max, 1) and (NS max, 1/2):
    // one using the enumeration oracle's classical max, one using the
    // published 2^(n-1) claim.
    double alpha_anchor_oracle = 0.0;
    double beta_anchor_oracle = 0.0;
    double alpha_anchor_claimed = 0.0;
    double beta_anchor_claimed = 0.0;
};

SweepReport sweep_and_fit(int n, double k_min, double k_max, int steps,
                          bool with_arrow = true, bool geq_k = false);

// Guessing probability of the later outcome given the earlier one:
// maximize P(a,b|A_i,B_j) / P(a|A_i,B_j) per cell (Charnes-Cooper
// homogenization: maximize the numerator over the constraint cone with the
// denominator pinned to 1), worst cell reported. Cells whose homogenized
// program is infeasible (denominator identically zero over the polytope) are
// skipped and listed in skipped_cells.
CertificationResult certify_conditional(int n, double k_target, bool with_arrow = true);

} // namespace trac
