#include "trac/temporal.hpp"

#include <string>

#include "trac/errors.hpp"

namespace trac {

namespace {

void require_scenario_size(int n, const char* where) {
    // 2 <= n <= 26 keeps 2^(n-1) inside int and the matrix mallocable.
    if (n < 2 || n > 26) {
        throw InvalidScenarioError(std::string(where) + ": n must be in [2, 26], got " +
                                   std::to_string(n));
    }
}

} // namespace

SignMatrix::SignMatrix(int n) : n_(n) {
    require_scenario_size(n, "SignMatrix");
    entries_.resize(static_cast<size_t>(rows()) * n_);
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < n_; ++j)
            entries_[static_cast<size_t>(i) * n_ + j] = static_cast<int8_t>(sign_entry(n_, i, j));
}

SignMatrix sign_matrix(int n) { return SignMatrix(n); }

double nosignaling_max(int n) {
    require_scenario_size(n, "nosignaling_max");
    return static_cast<double>(n) * static_cast<double>(1 << (n - 1));
}

void TemporalStrategy::validate() const {
    require_scenario_size(n, "TemporalStrategy");
    const size_t settings = static_cast<size_t>(1) << (n - 1);
    if (alice_axes.size() != settings) {
        throw InvalidScenarioError("TemporalStrategy: expected " + std::to_string(settings) +
                                   " alice axes, got " + std::to_string(alice_axes.size()));
    }
    if (bob_axes.size() != static_cast<size_t>(n)) {
        throw InvalidScenarioError("TemporalStrategy: expected " + std::to_string(n) +
                                   " bob axes, got " + std::to_string(bob_axes.size()));
    }
    for (const auto& a : alice_axes) {
        Projector probe{a, 0};
        outcome_probability(input_state, probe); // checks axis norm and state norm
    }
    for (const auto& b : bob_axes) {
        Projector probe{b, 0};
        outcome_probability(input_state, probe);
    }
}

double joint_probability(const BlochVector& input_state, const BlochVector& alice_axis,
                         const BlochVector& bob_axis, int a, int b) {
    const Projector first{alice_axis, a};
    const double pa = outcome_probability(input_state, first);
    if (pa <= 0.0) return 0.0; // branch never happens, no conditioning
    const BlochVector collapsed = post_measurement_state(input_state, first);
    return pa * outcome_probability(collapsed, Projector{bob_axis, b});
}

double two_time_correlator(const BlochVector& input_state, const BlochVector& alice_axis,
                           const BlochVector& bob_axis) {
    double c = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double sign = ((a ^ b) == 0) ? 1.0 : -1.0;
            c += sign * joint_probability(input_state, alice_axis, bob_axis, a, b);
        }
    }
    return c;
}

CorrelationTable correlation_table(const TemporalStrategy& strategy) {
    strategy.validate();
    CorrelationTable table;
    table.n = strategy.n;
    const int rows = 1 << (strategy.n - 1);
    table.values.resize(static_cast<size_t>(rows) * strategy.n);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < strategy.n; ++j)
            table.values[static_cast<size_t>(i) * strategy.n + j] = two_time_correlator(
                strategy.input_state, strategy.alice_axes[i], strategy.bob_axes[j]);
    return table;
}

double evaluate_K(const TemporalStrategy& strategy) {
    const CorrelationTable table = correlation_table(strategy);
    const int rows = 1 << (strategy.n - 1);
    double k = 0.0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < strategy.n; ++j)
            k += sign_entry(strategy.n, i, j) * table.c(i, j);
    return k;
}

} // namespace trac
