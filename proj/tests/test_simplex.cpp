#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "trac/errors.hpp"
#include "trac/simplex.hpp"

using trac::LpProblem;
using trac::LpSolution;
using trac::LpStatus;

TEST_CASE("one-row equality, optimum at a vertex") {
    LpProblem p;
    p.num_vars = 2;
    p.objective = {1.0, 0.0};
    p.rows = {{1.0, 1.0}};
    p.rhs = {1.0};
    const LpSolution s = trac::solve_lp(p);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.x[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.x[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s.duality_gap < 1e-9);
    CHECK(s.dual[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("slack-form inequality") {
    // max 2x + 3y with x + y <= 4
    LpProblem p;
    p.num_vars = 3;
    p.objective = {2.0, 3.0, 0.0};
    p.rows = {{1.0, 1.0, 1.0}};
    p.rhs = {4.0};
    const LpSolution s = trac::solve_lp(p);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(s.x[1] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("negative right-hand sides are handled by row flips") {
    // max -x0 with -x0 - x1 = -3  (i.e. x0 + x1 = 3)
    LpProblem p;
    p.num_vars = 2;
    p.objective = {-1.0, 0.0};
    p.rows = {{-1.0, -1.0}};
    p.rhs = {-3.0};
    const LpSolution s = trac::solve_lp(p);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s.x[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(s.max_primal_violation < 1e-9);
    CHECK(s.duality_gap < 1e-9);
}

TEST_CASE("Beale's cycling instance terminates under Bland's rule") {
    // max 3/4 a - 150 b + 1/50 c - 6 d, slacks e,f,g; optimum 1/20.
    LpProblem p;
    p.num_vars = 7;
    p.objective = {0.75, -150.0, 0.02, -6.0, 0.0, 0.0, 0.0};
    p.rows = {{0.25, -60.0, -0.04, 9.0, 1.0, 0.0, 0.0},
              {0.5, -90.0, -0.02, 3.0, 0.0, 1.0, 0.0},
              {0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0}};
    p.rhs = {0.0, 0.0, 1.0};
    const LpSolution s = trac::solve_lp(p);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == doctest::Approx(0.05).epsilon(1e-10));
    CHECK(s.x[0] == doctest::Approx(0.04).epsilon(1e-9));
    CHECK(s.x[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.duality_gap < 1e-9);
}

TEST_CASE("infeasible systems are reported") {
    LpProblem p;
    p.num_vars = 2;
    p.objective = {1.0, 1.0};
    p.rows = {{1.0, 1.0}};
    p.rhs = {-1.0};
    CHECK(trac::solve_lp(p).status == LpStatus::infeasible);

    LpProblem q;
    q.num_vars = 1;
    q.objective = {1.0};
    q.rows = {{1.0}, {1.0}};
    q.rhs = {1.0, 2.0};
    CHECK(trac::solve_lp(q).status == LpStatus::infeasible);
}

TEST_CASE("redundant equalities leave inert artificials") {
    LpProblem p;
    p.num_vars = 2;
    p.objective = {1.0, 0.0};
    p.rows = {{1.0, 1.0}, {1.0, 1.0}, {2.0, 2.0}};
    p.rhs = {1.0, 1.0, 2.0};
    const LpSolution s = trac::solve_lp(p);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.max_primal_violation < 1e-9);
    CHECK(s.duality_gap < 1e-9);
}

TEST_CASE("unbounded rays are detected") {
    // max x0 + x1 with x0 - x1 = 0
    LpProblem p;
    p.num_vars = 2;
    p.objective = {1.0, 1.0};
    p.rows = {{1.0, -1.0}};
    p.rhs = {0.0};
    CHECK(trac::solve_lp(p).status == LpStatus::unbounded);
}

TEST_CASE("malformed problems are rejected") {
    LpProblem p;
    p.num_vars = 0;
    CHECK_THROWS_AS(trac::solve_lp(p), trac::InvalidScenarioError);

    LpProblem q;
    q.num_vars = 2;
    q.objective = {1.0, 0.0};
    q.rows = {{1.0}};
    q.rhs = {1.0};
    CHECK_THROWS_AS(trac::solve_lp(q), trac::InvalidScenarioError);
}

TEST_CASE("random feasible programs close the duality gap") {
    std::mt19937_64 rng(0x10adu);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_real_distribution<double> level(0.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 3, extra = 5;
        LpProblem p;
        p.num_vars = m + extra + 1; // last column bounds the feasible set
        // plant a nonnegative solution so phase 1 must succeed
        std::vector<double> planted(p.num_vars - 1);
        for (auto& v : planted) v = level(rng);
        double planted_sum = 0.0;
        for (double v : planted) planted_sum += v;
        for (int r = 0; r < m; ++r) {
            std::vector<double> row(p.num_vars, 0.0);
            double b = 0.0;
            for (int j = 0; j < m + extra; ++j) {
                row[j] = coef(rng);
                b += row[j] * planted[j];
            }
            p.rows.push_back(row);
            p.rhs.push_back(b);
        }
        // sum of all variables pinned, which bounds every coordinate
        std::vector<double> cap(p.num_vars, 1.0);
        p.rows.push_back(cap);
        p.rhs.push_back(planted_sum + 5.0);
        p.objective.assign(p.num_vars, 0.0);
        for (int j = 0; j < m + extra; ++j) p.objective[j] = coef(rng);

        const LpSolution s = trac::solve_lp(p);
        REQUIRE(s.status == LpStatus::optimal);
        REQUIRE(s.duality_gap < 1e-9);
        REQUIRE(s.max_primal_violation < 1e-9);
        REQUIRE(s.max_dual_violation < 1e-9);
        for (double v : s.x) REQUIRE(v >= -1e-12);
    }
}
