#include <cmath>
#include <cstddef>

#include <doctest.h>

#include "known_optima.hpp"
#include "trac/certifier.hpp"
#include "trac/errors.hpp"

namespace {

// Product table of the deterministic point: both parties always output 0.
trac::JointTable all_zero_table(int n) {
    trac::JointTable t;
    t.n = n;
    t.p.assign(static_cast<size_t>(t.cells()), 0.0);
    for (int i = 0; i < t.alice_settings(); ++i)
        for (int j = 0; j < n; ++j) t.at(i, j, 0, 0) = 1.0;
    return t;
}

// Extremal no-signaling table: every correlator saturates its weight's sign.
trac::JointTable saturating_table(int n) {
    trac::JointTable t;
    t.n = n;
    t.p.assign(static_cast<size_t>(t.cells()), 0.0);
    for (int i = 0; i < t.alice_settings(); ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if ((((a ^ b) == 0) ? 1 : -1) == trac::sign_entry(n, i, j))
                        t.at(i, j, a, b) = 0.5;
    return t;
}

trac::JointTable mix(const trac::JointTable& x, const trac::JointTable& y, double w) {
    trac::JointTable t = x;
    for (size_t c = 0; c < t.p.size(); ++c) t.p[c] = w * x.p[c] + (1.0 - w) * y.p[c];
    return t;
}

} // namespace

TEST_CASE("constraint matrix dimensions") {
    const trac::LpProblem p2 = trac::build_lp(2, 2.5);
    CHECK(p2.num_vars == 16);
    CHECK(p2.rows.size() == 13); // 4 normalization + 4 + 4 marginal-match + K

    const trac::LpProblem p3 = trac::build_lp(3, 6.0);
    CHECK(p3.num_vars == 48);
    CHECK(p3.rows.size() == 47);

    const trac::LpProblem p4 = trac::build_lp(4, 12.0);
    CHECK(p4.num_vars == 128);
    CHECK(p4.rows.size() == 137);

    CHECK(trac::build_lp(2, 2.5, true, true).num_vars == 17);
    CHECK(trac::build_lp(2, 2.5, false).rows.size() == 9);
}

TEST_CASE("unreachable K targets and bad sizes are rejected") {
    CHECK_THROWS_AS(trac::build_lp(2, 4.5), trac::InfeasibleError);
    CHECK_THROWS_AS(trac::build_lp(2, -4.5), trac::InfeasibleError);
    CHECK_THROWS_AS(trac::build_lp(1, 1.0), trac::InvalidScenarioError);
    CHECK_THROWS_AS(trac::build_lp(7, 1.0), trac::InvalidScenarioError);
    CHECK_THROWS_AS(trac::certify(2, 4.2), trac::InfeasibleError);
}

TEST_CASE("tables realized by strategies satisfy every constraint") {
    for (int n = 2; n <= 3; ++n) {
        const trac::TemporalStrategy s = known::optimal_strategy(n);
        const trac::JointTable t = trac::joint_table(s);
        const double k = trac::evaluate_K(s);
        CHECK(trac::table_k(t) == doctest::Approx(k).epsilon(1e-12));
        CHECK(trac::max_constraint_violation(t, k) < 1e-12);
    }
}

TEST_CASE("handwritten deterministic and saturating tables") {
    const trac::JointTable d = all_zero_table(2);
    CHECK(trac::table_k(d) == 2.0);
    CHECK(trac::max_constraint_violation(d, 2.0) == 0.0);

    const trac::JointTable s = saturating_table(2);
    CHECK(trac::table_k(s) == 4.0);
    CHECK(trac::max_constraint_violation(s, 4.0) == 0.0);

    // K deliberately off by 0.25
    CHECK(trac::max_constraint_violation(d, 2.25) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("guessing probability at the three landmark K values, n=2") {
    const trac::CertificationResult at2 = trac::certify(2, 2.0);
    CHECK(at2.p_star == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(at2.min_entropy == doctest::Approx(0.0).epsilon(1e-9));

    const trac::CertificationResult at4 = trac::certify(2, 4.0);
    CHECK(at4.p_star == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(at4.min_entropy == doctest::Approx(1.0).epsilon(1e-9));

    const double k = 2.0 * std::sqrt(2.0);
    const trac::CertificationResult mid = trac::certify(2, k);
    // the optimum sits on the line through (2, 1) and (4, 1/2)
    const double expected = 1.5 - k / 4.0;
    CHECK(mid.p_star == doctest::Approx(expected).epsilon(1e-9));
    CHECK(mid.p_star == doctest::Approx(0.79289321881345243).epsilon(1e-9));
    CHECK(mid.min_entropy == doctest::Approx(-std::log2(expected)).epsilon(1e-9));
    CHECK(mid.min_entropy == doctest::Approx(0.33480150772378803).epsilon(1e-9));
    CHECK(mid.max_duality_gap < 1e-9);
    CHECK(mid.skipped_cells.empty());

    // the reported adversarial table must be feasible and attain p_star
    CHECK(trac::max_constraint_violation(mid.table, k) < 1e-8);
    const trac::CellIndex c = mid.argmax_cell;
    CHECK(mid.table.at(c.i, c.j, c.a, c.b) == doctest::Approx(mid.p_star).epsilon(1e-9));
}

TEST_CASE("guessing probability endpoints, n=3") {
    CHECK(trac::certify(3, 6.0).p_star == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(trac::certify(3, 12.0).p_star == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("sweep over n=2 recovers the published certification line") {
    const trac::SweepReport r = trac::sweep_and_fit(2, 2.0, 4.0, 9);
    REQUIRE(r.points.size() == 9);
    CHECK(r.alpha_fit == doctest::Approx(-0.25).epsilon(1e-9));
    CHECK(r.beta_fit == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(r.max_residual < 1e-8);
    CHECK(r.alpha_claimed == -0.25);
    CHECK(r.beta_claimed == 1.5);
    // for n=2 the enumerated and claimed classical maxima coincide at 2
    CHECK(r.alpha_anchor_oracle == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(r.beta_anchor_oracle == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(r.alpha_anchor_claimed == doctest::Approx(-0.25).epsilon(1e-12));
    for (size_t s = 1; s < r.points.size(); ++s)
        CHECK(r.points[s].p_star <= r.points[s - 1].p_star + 1e-9);
    for (const auto& pt : r.points) CHECK(pt.max_duality_gap < 1e-9);
}

TEST_CASE("anchor lines for n=3 separate the enumerated and claimed maxima") {
    const trac::SweepReport r = trac::sweep_and_fit(3, 6.0, 12.0, 3);
    CHECK(r.alpha_anchor_oracle == doctest::Approx(-0.5 / 6.0).epsilon(1e-12));
    CHECK(r.beta_anchor_oracle == doctest::Approx(1.5).epsilon(1e-12));
    // the claimed classical max 4 reproduces the published (alpha, beta)
    CHECK(r.alpha_anchor_claimed == doctest::Approx(r.alpha_claimed).epsilon(1e-12));
    CHECK(r.beta_anchor_claimed == doctest::Approx(r.beta_claimed).epsilon(1e-12));
}

TEST_CASE("relaxing the K equality to >= does not change a monotone sweep") {
    for (double k : {2.2, 3.0, 3.8}) {
        const double eq = trac::certify(2, k, true, false).p_star;
        const double geq = trac::certify(2, k, true, true).p_star;
        CHECK(geq == doctest::Approx(eq).epsilon(1e-9));
    }
}

TEST_CASE("dropping the earlier-marginal constraints can only help the guesser") {
    const double with_arrow = trac::certify(2, 3.0, true).p_star;
    const double without = trac::certify(2, 3.0, false).p_star;
    CHECK(without >= with_arrow - 1e-9);
}

TEST_CASE("conditional guessing stays perfect across the quantum range") {
    // Certificate: mix the deterministic table into the saturating one until
    // K = 2 sqrt(2). In that table Bob's outcome is a function of Alice's in
    // every cell, so the conditional guess succeeds with certainty, and the
    // optimizer must find a value of 1 (0 certified bits).
    const double k = 2.0 * std::sqrt(2.0);
    const double w = 2.0 - std::sqrt(2.0); // weight of the deterministic table
    const trac::JointTable cert = mix(all_zero_table(2), saturating_table(2), w);
    REQUIRE(trac::table_k(cert) == doctest::Approx(k).epsilon(1e-14));
    REQUIRE(trac::max_constraint_violation(cert, k) < 1e-12);
    const double joint = cert.at(0, 0, 0, 0);
    const double marginal = cert.at(0, 0, 0, 0) + cert.at(0, 0, 0, 1);
    REQUIRE(joint / marginal == 1.0);

    const trac::CertificationResult mid = trac::certify_conditional(2, k);
    CHECK(mid.p_star == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(mid.min_entropy == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(mid.skipped_cells.empty());

    CHECK(trac::certify_conditional(2, 4.0).p_star == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(trac::certify_conditional(2, 2.0).p_star == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("conditional solver returns probability tables, not cone points") {
    const trac::CertificationResult r = trac::certify_conditional(2, 3.0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double sum = 0.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) sum += r.table.at(i, j, a, b);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-8));
        }
}

TEST_CASE("sweep input validation") {
    CHECK_THROWS_AS(trac::sweep_and_fit(2, 2.0, 4.0, 1), trac::InvalidScenarioError);
    CHECK_THROWS_AS(trac::sweep_and_fit(2, 4.0, 2.0, 5), trac::InvalidScenarioError);
    CHECK_THROWS_AS(trac::sweep_and_fit(9, 2.0, 4.0, 5), trac::InvalidScenarioError);
}
