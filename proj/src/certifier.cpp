#include "trac/certifier.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <string>
#include <thread>

#include "trac/classical.hpp"
#include "trac/errors.hpp"

namespace trac {

namespace {

void require_certifiable(int n, const char* where) {
    // 4 n 2^(n-1) variables; n = 6 already means ~900 equality rows, which is
    // the edge of what the dense tableau turns around quickly.
    if (n < 2 || n > 6) {
        throw InvalidScenarioError(std::string(where) + ": n must be in [2, 6], got " +
                                   std::to_string(n));
    }
}

double outcome_parity(int a, int b) { return ((a ^ b) == 0) ? 1.0 : -1.0; }

LpSolution solve_or_throw(const LpProblem& problem, const char* where) {
    const LpSolution sol = solve_lp(problem);
    switch (sol.status) {
        case LpStatus::optimal:
            return sol;
        case LpStatus::infeasible:
            throw InfeasibleError(std::string(where) + ": constraint set is infeasible");
        case LpStatus::unbounded:
            throw SolverError(std::string(where) + ": LP reported unbounded (bounded by "
                              "construction; numerical failure)");
        case LpStatus::iteration_limit:
            throw SolverError(std::string(where) + ": simplex hit the pivot limit");
    }
    throw SolverError(std::string(where) + ": unknown LP status");
}

struct CellSolve {
    double value = 0.0;
    bool skipped = false;
    LpSolution solution;
};

std::vector<CellIndex> all_cells(int n) {
    std::vector<CellIndex> cells;
    const int rows = 1 << (n - 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) cells.push_back({i, j, a, b});
    return cells;
}

// Runs `solve` for every cell on a small thread pool; results land in a
// vector indexed by cell so the later reduction is order-independent.
template <typename Solve>
std::vector<CellSolve> solve_cells(const std::vector<CellIndex>& cells, Solve solve) {
    std::vector<CellSolve> results(cells.size());
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int workers = static_cast<int>(std::min<size_t>(hw, cells.size()));
    std::vector<std::future<void>> parts;
    for (int w = 0; w < workers; ++w) {
        parts.push_back(std::async(std::launch::async, [&, w] {
            for (size_t c = w; c < cells.size(); c += workers) results[c] = solve(cells[c]);
        }));
    }
    for (auto& p : parts) p.get();
    return results;
}

CertificationResult reduce_cells(int n, double k_target,
                                 const std::vector<CellIndex>& cells,
                                 const std::vector<CellSolve>& results) {
    CertificationResult out;
    out.n = n;
    out.k_value = k_target;
    int best = -1;
    for (size_t c = 0; c < results.size(); ++c) {
        if (results[c].skipped) {
            out.skipped_cells.push_back(cells[c]);
            continue;
        }
        out.max_duality_gap = std::max(out.max_duality_gap, results[c].solution.duality_gap);
        if (best < 0 || results[c].value > results[best].value) best = static_cast<int>(c);
    }
    if (best < 0) {
        throw InfeasibleError("certify: every cell objective was skipped");
    }
    out.p_star = results[best].value;
    const double entropy = -std::log2(out.p_star);
    out.min_entropy = entropy == 0.0 ? 0.0 : entropy; // drop the sign of -0.0 at p_star = 1
    out.argmax_cell = cells[best];
    out.table.n = n;
    out.table.p.assign(results[best].solution.x.begin(),
                       results[best].solution.x.begin() + JointTable{n, {}}.cells());
    return out;
}

} // namespace

JointTable joint_table(const TemporalStrategy& strategy) {
    strategy.validate();
    JointTable table;
    table.n = strategy.n;
    table.p.resize(table.cells());
    for (int i = 0; i < table.alice_settings(); ++i)
        for (int j = 0; j < strategy.n; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    table.at(i, j, a, b) = joint_probability(
                        strategy.input_state, strategy.alice_axes[i], strategy.bob_axes[j], a, b);
    return table;
}

double table_k(const JointTable& table) {
    double k = 0.0;
    for (int i = 0; i < table.alice_settings(); ++i)
        for (int j = 0; j < table.n; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    k += sign_entry(table.n, i, j) * outcome_parity(a, b) * table.at(i, j, a, b);
    return k;
}

double max_constraint_violation(const JointTable& table, double k_target, bool with_arrow) {
    const int n = table.n;
    const int rows = table.alice_settings();
    double worst = 0.0;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < n; ++j) {
            double sum = 0.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    sum += table.at(i, j, a, b);
                    worst = std::max(worst, -table.at(i, j, a, b));
                }
            worst = std::max(worst, std::fabs(sum - 1.0));
        }
    }
    for (int i = 1; i < rows; ++i)
        for (int j = 0; j < n; ++j)
            for (int b = 0; b < 2; ++b) {
                const double here = table.at(i, j, 0, b) + table.at(i, j, 1, b);
                const double ref = table.at(0, j, 0, b) + table.at(0, j, 1, b);
                worst = std::max(worst, std::fabs(here - ref));
            }
    if (with_arrow) {
        for (int i = 0; i < rows; ++i)
            for (int j = 1; j < n; ++j)
                for (int a = 0; a < 2; ++a) {
                    const double here = table.at(i, j, a, 0) + table.at(i, j, a, 1);
                    const double ref = table.at(i, 0, a, 0) + table.at(i, 0, a, 1);
                    worst = std::max(worst, std::fabs(here - ref));
                }
    }
    worst = std::max(worst, std::fabs(table_k(table) - k_target));
    return worst;
}

LpProblem build_lp(int n, double k_target, bool with_arrow, bool geq_k) {
    require_certifiable(n, "build_lp");
    if (std::fabs(k_target) > nosignaling_max(n)) {
        throw InfeasibleError("build_lp: |k_target| = " + std::to_string(std::fabs(k_target)) +
                              " exceeds the algebraic maximum " +
                              std::to_string(nosignaling_max(n)));
    }
    const int rows = 1 << (n - 1);
    const int cells = 4 * n * rows;

    LpProblem lp;
    lp.num_vars = cells + (geq_k ? 1 : 0); // optional slack turns K >= k into an equality
    lp.objective.assign(lp.num_vars, 0.0);

    auto blank = [&] { return std::vector<double>(lp.num_vars, 0.0); };

    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < n; ++j) {
            auto row = blank();
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) row[JointTable::index(n, i, j, a, b)] = 1.0;
            lp.rows.push_back(std::move(row));
            lp.rhs.push_back(1.0);
        }
    }
    for (int i = 1; i < rows; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int b = 0; b < 2; ++b) {
                auto row = blank();
                for (int a = 0; a < 2; ++a) {
                    row[JointTable::index(n, i, j, a, b)] += 1.0;
                    row[JointTable::index(n, 0, j, a, b)] -= 1.0;
                }
                lp.rows.push_back(std::move(row));
                lp.rhs.push_back(0.0);
            }
        }
    }
    if (with_arrow) {
        for (int i = 0; i < rows; ++i) {
            for (int j = 1; j < n; ++j) {
                for (int a = 0; a < 2; ++a) {
                    auto row = blank();
                    for (int b = 0; b < 2; ++b) {
                        row[JointTable::index(n, i, j, a, b)] += 1.0;
                        row[JointTable::index(n, i, 0, a, b)] -= 1.0;
                    }
                    lp.rows.push_back(std::move(row));
                    lp.rhs.push_back(0.0);
                }
            }
        }
    }
    auto k_row = blank();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    k_row[JointTable::index(n, i, j, a, b)] =
                        sign_entry(n, i, j) * outcome_parity(a, b);
    if (geq_k) k_row[cells] = -1.0;
    lp.rows.push_back(std::move(k_row));
    lp.rhs.push_back(k_target);
    return lp;
}

CertificationResult certify(int n, double k_target, bool with_arrow, bool geq_k) {
    const LpProblem base = build_lp(n, k_target, with_arrow, geq_k);
    const std::vector<CellIndex> cells = all_cells(n);
    const auto results = solve_cells(cells, [&](const CellIndex& cell) {
        LpProblem lp = base;
        lp.objective[JointTable::index(n, cell.i, cell.j, cell.a, cell.b)] = 1.0;
        CellSolve out;
        out.solution = solve_or_throw(lp, "certify");
        out.value = out.solution.objective_value;
        return out;
    });
    return reduce_cells(n, k_target, cells, results);
}

SweepReport sweep_and_fit(int n, double k_min, double k_max, int steps, bool with_arrow,
                          bool geq_k) {
    require_certifiable(n, "sweep_and_fit");
    if (steps < 2) {
        throw InvalidScenarioError("sweep_and_fit: need at least 2 grid points, got " +
                                   std::to_string(steps));
    }
    if (!(k_min < k_max)) {
        throw InvalidScenarioError("sweep_and_fit: need k_min < k_max");
    }

    SweepReport report;
    report.n = n;
    for (int s = 0; s < steps; ++s) {
        const double k = k_min + (k_max - k_min) * s / (steps - 1);
        report.points.push_back(certify(n, k, with_arrow, geq_k));
    }

    double mean_k = 0.0, mean_p = 0.0;
    for (const auto& pt : report.points) {
        mean_k += pt.k_value;
        mean_p += pt.p_star;
    }
    mean_k /= steps;
    mean_p /= steps;
    double var = 0.0, cov = 0.0;
    for (const auto& pt : report.points) {
        var += (pt.k_value - mean_k) * (pt.k_value - mean_k);
        cov += (pt.k_value - mean_k) * (pt.p_star - mean_p);
    }
    report.alpha_fit = cov / var;
    report.beta_fit = mean_p - report.alpha_fit * mean_k;
    for (const auto& pt : report.points) {
        const double residual =
            std::fabs(pt.p_star - (report.beta_fit + report.alpha_fit * pt.k_value));
        report.max_residual = std::max(report.max_residual, residual);
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    switch (n) {
        case 2: report.alpha_claimed = -1.0 / 4.0;  report.beta_claimed = 3.0 / 2.0; break;
        case 3: report.alpha_claimed = -1.0 / 16.0; report.beta_claimed = 5.0 / 4.0; break;
        case 4: report.alpha_claimed = -1.0 / 48.0; report.beta_claimed = 7.0 / 6.0; break;
        default: report.alpha_claimed = nan; report.beta_claimed = nan; break;
    }

    const double ns = nosignaling_max(n);
    const double k_oracle = max_K_deterministic(n).k;
    report.alpha_anchor_oracle = (0.5 - 1.0) / (ns - k_oracle);
    report.beta_anchor_oracle = 1.0 - report.alpha_anchor_oracle * k_oracle;
    const double k_claimed = static_cast<double>(1 << (n - 1));
    report.alpha_anchor_claimed = (0.5 - 1.0) / (ns - k_claimed);
    report.beta_anchor_claimed = 1.0 - report.alpha_anchor_claimed * k_claimed;
    return report;
}

CertificationResult certify_conditional(int n, double k_target, bool with_arrow) {
    const LpProblem base = build_lp(n, k_target, with_arrow, false);
    const int cells_count = 4 * n * (1 << (n - 1));

    // Homogenized feasible cone: original equalities become row.x - rhs.t = 0
    // and the per-cell denominator row pins sum_b P(a, b | i, j) to 1.
    LpProblem cone;
    cone.num_vars = cells_count + 1;
    cone.objective.assign(cone.num_vars, 0.0);
    for (size_t r = 0; r < base.rows.size(); ++r) {
        auto row = base.rows[r];
        row.push_back(-base.rhs[r]);
        cone.rows.push_back(std::move(row));
        cone.rhs.push_back(0.0);
    }

    const std::vector<CellIndex> cells = all_cells(n);
    const auto results = solve_cells(cells, [&](const CellIndex& cell) {
        LpProblem lp = cone;
        std::vector<double> denominator(cone.num_vars, 0.0);
        for (int b = 0; b < 2; ++b)
            denominator[JointTable::index(n, cell.i, cell.j, cell.a, b)] = 1.0;
        lp.rows.push_back(std::move(denominator));
        lp.rhs.push_back(1.0);
        lp.objective[JointTable::index(n, cell.i, cell.j, cell.a, cell.b)] = 1.0;

        CellSolve out;
        const LpSolution sol = solve_lp(lp);
        if (sol.status == LpStatus::infeasible) {
            out.skipped = true; // conditioning event has probability zero everywhere
            return out;
        }
        if (sol.status != LpStatus::optimal) {
            throw SolverError("certify_conditional: simplex failed on a cell solve");
        }
        out.solution = sol;
        out.value = sol.objective_value;
        // Undo the homogenization so the stored table is a probability table
        // again. Any feasible cone point has t >= 1 here (the denominator is
        // part of a normalized setting), so the division is safe.
        const double t = out.solution.x[cells_count];
        if (t > 0.0) {
            for (int c = 0; c < cells_count; ++c) out.solution.x[c] /= t;
        }
        return out;
    });

    return reduce_cells(n, k_target, cells, results);
}

} // namespace trac
