#include "trac/seesaw.hpp"

#include <cmath>
#include <future>
#include <random>
#include <string>
#include <thread>

#include "trac/errors.hpp"
#include "trac/rac.hpp"

namespace trac {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the engine's full 64-bit output; avoids the
// implementation-defined std::uniform_real_distribution so that streams are
// identical across standard libraries.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BlochVector random_unit_axis(std::mt19937_64& rng) {
    constexpr double two_pi = 6.28318530717958647692;
    // Box-Muller pairs; rejection only on the (measure-zero) degenerate draw.
    for (;;) {
        const double u1 = next_unit(rng), u2 = next_unit(rng), u3 = next_unit(rng);
        const double r1 = std::sqrt(-2.0 * std::log1p(-u1));
        const double r2 = std::sqrt(-2.0 * std::log1p(-u2));
        BlochVector v{r1 * std::cos(two_pi * u2), r1 * std::sin(two_pi * u2),
                      r2 * std::cos(two_pi * u3)};
        const double norm = v.norm();
        if (norm > 1e-12) return v * (1.0 / norm);
    }
}

struct SweepState {
    std::vector<BlochVector> alice;
    std::vector<BlochVector> bob;
};

double k_of(int n, const SweepState& s) {
    const int rows = 1 << (n - 1);
    double k = 0.0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < n; ++j) k += sign_entry(n, i, j) * s.alice[i].dot(s.bob[j]);
    return k;
}

BlochVector normalize_resultant(BlochVector r, int* perturbations) {
    double norm = r.norm();
    if (norm < 1e-12) {
        r = r + BlochVector{0.0, 0.0, 1e-8};
        norm = r.norm();
        ++*perturbations;
    }
    return r * (1.0 / norm);
}

RestartOutcome run_restart(const OptimizerConfig& config, int restart, SweepState* state) {
    const int n = config.n;
    const int rows = 1 << (n - 1);
    std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(static_cast<std::uint64_t>(restart))));

    state->alice.resize(rows);
    state->bob.resize(n);
    for (auto& a : state->alice) a = random_unit_axis(rng);
    for (auto& b : state->bob) b = random_unit_axis(rng);

    RestartOutcome out;
    out.restart = restart;
    double k_prev = k_of(n, *state);
    for (int sweep = 1; sweep <= config.max_sweeps; ++sweep) {
        out.sweeps = sweep;
        for (int i = 0; i < rows; ++i) {
            BlochVector r{};
            for (int j = 0; j < n; ++j) r = r + state->bob[j] * sign_entry(n, i, j);
            state->alice[i] = normalize_resultant(r, &out.perturbations);
        }
        for (int j = 0; j < n; ++j) {
            BlochVector r{};
            for (int i = 0; i < rows; ++i) r = r + state->alice[i] * sign_entry(n, i, j);
            state->bob[j] = normalize_resultant(r, &out.perturbations);
        }
        const double k = k_of(n, *state);
        if (k - k_prev < config.tolerance) {
            k_prev = std::max(k, k_prev);
            break;
        }
        k_prev = k;
    }
    out.k = k_prev;
    return out;
}

} // namespace

void OptimizerConfig::validate() const {
    if (n < 2 || n > 26)
        throw InvalidScenarioError("OptimizerConfig: n must be in [2, 26], got " +
                                   std::to_string(n));
    if (restarts < 1)
        throw InvalidScenarioError("OptimizerConfig: restarts must be >= 1, got " +
                                   std::to_string(restarts));
    if (!(tolerance > 0.0))
        throw InvalidScenarioError("OptimizerConfig: tolerance must be > 0");
    if (max_sweeps < 1)
        throw InvalidScenarioError("OptimizerConfig: max_sweeps must be >= 1, got " +
                                   std::to_string(max_sweeps));
}

OptimumReport seesaw_maximize(const OptimizerConfig& config) {
    config.validate();

    std::vector<RestartOutcome> outcomes(config.restarts);
    std::vector<SweepState> states(config.restarts);

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int workers = static_cast<int>(std::min<unsigned>(hw, config.restarts));
    std::vector<std::future<void>> parts;
    for (int w = 0; w < workers; ++w) {
        parts.push_back(std::async(std::launch::async, [&, w] {
            for (int r = w; r < config.restarts; r += workers)
                outcomes[r] = run_restart(config, r, &states[r]);
        }));
    }
    for (auto& p : parts) p.get();

    int best = 0;
    for (int r = 1; r < config.restarts; ++r)
        if (outcomes[r].k > outcomes[best].k) best = r;

    OptimumReport report;
    report.best_k = outcomes[best].k;
    report.sweeps_used = outcomes[best].sweeps;
    report.restart_index = best;
    report.restarts = std::move(outcomes);
    report.strategy = TemporalStrategy{config.n, std::move(states[best].alice),
                                       std::move(states[best].bob), BlochVector{}};
    return report;
}

ConjectureCheck conjecture_check(int n, std::uint64_t seed) {
    if (n < 2 || n > 4)
        throw InvalidScenarioError("conjecture_check: closed-form optima known for n in "
                                   "{2, 3, 4}, got " + std::to_string(n));
    OptimizerConfig config;
    config.n = n;
    config.seed = seed;
    const OptimumReport report = seesaw_maximize(config);

    ConjectureCheck check;
    check.n = n;
    check.best_k = report.best_k;
    check.f_direct = success_probability(temporal_to_rac(report.strategy));
    check.f_from_bridge = f_from_k(n, report.best_k);
    check.known_k = n == 2   ? 2.0 * std::sqrt(2.0)
                    : n == 3 ? 4.0 * std::sqrt(3.0)
                             : 4.0 * (std::sqrt(6.0) + std::sqrt(2.0));
    check.known_f = f_from_k(n, check.known_k);
    return check;
}

} // namespace trac
