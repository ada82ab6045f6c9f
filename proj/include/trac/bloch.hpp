#pragma once

#include <cmath>

namespace trac {

// Tolerance for "unit length" checks on measurement axes.
inline constexpr double axis_norm_tolerance = 1e-9;

// A qubit state or measurement direction in the Bloch ball. Plain value type;
// all operations below are pure functions.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }

    BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
    BlochVector operator-() const { return {-x, -y, -z}; }
    BlochVector operator*(double s) const { return {x * s, y * s, z * s}; }

    bool operator==(const BlochVector& o) const = default;
};

// Rank-1 projective measurement effect: the projector onto the +1 (outcome 0)
// or -1 (outcome 1) eigenstate of axis.sigma. The axis must be unit length;
// off-norm axes are rejected, never silently renormalized.
struct Projector {
    BlochVector axis;
    int outcome = 0; // 0 or 1
};

// Probability of observing `p.outcome` when measuring `state`:
//   (1/2) (1 + (-1)^outcome axis.state)
double outcome_probability(const BlochVector& state, const Projector& p);

// Post-measurement (collapsed) state given that `p` fired: the eigenstate
// (-1)^outcome * axis. Throws NullEventError when the outcome has
// probability zero for `state`.
BlochVector post_measurement_state(const BlochVector& state, const Projector& p);

// Trace overlap Tr[P Q] of two rank-1 projectors:
//   (1/2) (1 + (-1)^(p.outcome + q.outcome) p.axis.q.axis)
double projector_overlap(const Projector& p, const Projector& q);

} // namespace trac
