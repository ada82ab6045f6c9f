#include "trac/bloch.hpp"

#include <cmath>
#include <string>

#include "trac/errors.hpp"

namespace trac {

namespace {

void require_unit_axis(const BlochVector& axis, const char* where) {
    const double n = axis.norm();
    if (std::fabs(n - 1.0) > axis_norm_tolerance) {
        throw InvalidAxisError(std::string(where) + ": measurement axis has norm " +
                               std::to_string(n) + ", expected 1 within 1e-9");
    }
}

void require_physical_state(const BlochVector& state, const char* where) {
    const double n = state.norm();
    if (n > 1.0 + axis_norm_tolerance || !std::isfinite(n)) {
        throw InvalidScenarioError(std::string(where) + ": state vector has norm " +
                                   std::to_string(n) + ", expected <= 1");
    }
}

int require_outcome(int outcome, const char* where) {
    if (outcome != 0 && outcome != 1) {
        throw InvalidScenarioError(std::string(where) + ": outcome must be 0 or 1, got " +
                                   std::to_string(outcome));
    }
    return outcome;
}

double outcome_sign(int outcome) { return outcome == 0 ? 1.0 : -1.0; }

} // namespace

double outcome_probability(const BlochVector& state, const Projector& p) {
    require_unit_axis(p.axis, "outcome_probability");
    require_physical_state(state, "outcome_probability");
    require_outcome(p.outcome, "outcome_probability");
    return 0.5 * (1.0 + outcome_sign(p.outcome) * p.axis.dot(state));
}

BlochVector post_measurement_state(const BlochVector& state, const Projector& p) {
    const double prob = outcome_probability(state, p);
    if (prob <= 0.0) {
        throw NullEventError("post_measurement_state: conditioning on outcome " +
                             std::to_string(p.outcome) + ", which has probability zero");
    }
    // Collapse onto the observed eigenstate; the prior state fixes only the
    // probability, not the collapsed direction.
    return p.axis * outcome_sign(p.outcome);
}

double projector_overlap(const Projector& p, const Projector& q) {
    require_unit_axis(p.axis, "projector_overlap");
    require_unit_axis(q.axis, "projector_overlap");
    require_outcome(p.outcome, "projector_overlap");
    require_outcome(q.outcome, "projector_overlap");
    const double rel = outcome_sign(p.outcome) * outcome_sign(q.outcome);
    return 0.5 * (1.0 + rel * p.axis.dot(q.axis));
}

} // namespace trac
