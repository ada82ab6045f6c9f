#include "trac/rac.hpp"

#include <string>

#include "trac/errors.hpp"

namespace trac {

void RacStrategy::validate() const {
    TemporalStrategy probe{n, encoding_axes, decoding_axes, BlochVector{}};
    try {
        probe.validate();
    } catch (const InvalidScenarioError& e) {
        throw InvalidScenarioError(std::string("RacStrategy: ") + e.what());
    }
}

BlochVector encoding_state(const RacStrategy& strategy, int x) {
    const int total = 1 << strategy.n;
    if (x < 0 || x >= total) {
        throw InvalidScenarioError("encoding_state: string index " + std::to_string(x) +
                                   " out of range for n = " + std::to_string(strategy.n));
    }
    const int rep_bits = 1 << (strategy.n - 1);
    if (x < rep_bits) return strategy.encoding_axes[x];
    return -strategy.encoding_axes[(total - 1) ^ x];
}

double success_probability(const RacStrategy& strategy) {
    strategy.validate();
    const int n = strategy.n;
    const int total = 1 << n;
    double sum = 0.0;
    for (int x = 0; x < total; ++x) {
        const BlochVector state = encoding_state(strategy, x);
        for (int y = 0; y < n; ++y) {
            const int wanted_bit = (x >> (n - 1 - y)) & 1;
            sum += outcome_probability(state, Projector{strategy.decoding_axes[y], wanted_bit});
        }
    }
    return sum / (static_cast<double>(n) * total);
}

namespace {

double bridge_scale(int n, const char* where) {
    if (n < 2 || n > 26) {
        throw InvalidScenarioError(std::string(where) + ": n must be in [2, 26], got " +
                                   std::to_string(n));
    }
    return static_cast<double>(n) * (1 << n);
}

} // namespace

double k_from_f(int n, double f) {
    const double scale = bridge_scale(n, "k_from_f");
    return scale * f - scale / 2.0;
}

double f_from_k(int n, double k) {
    const double scale = bridge_scale(n, "f_from_k");
    return 0.5 + k / scale;
}

TemporalStrategy rac_to_temporal(const RacStrategy& strategy) {
    strategy.validate();
    return TemporalStrategy{strategy.n, strategy.encoding_axes, strategy.decoding_axes,
                            BlochVector{}};
}

RacStrategy temporal_to_rac(const TemporalStrategy& strategy) {
    strategy.validate();
    return RacStrategy{strategy.n, strategy.alice_axes, strategy.bob_axes};
}

} // namespace trac
