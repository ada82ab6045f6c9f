#pragma once

#include <cstdint>
#include <vector>

#include "trac/bloch.hpp"

namespace trac {

// The K_{n->1} scenario: Alice chooses one of 2^(n-1) measurement settings,
// Bob one of n; both measure sequentially on the same qubit and K is a
// +/-1-weighted sum of the two-time correlators C_ij.
//
// Row i (0-based) of the weight matrix encodes the n-bit string whose leading
// bit is 0 and whose trailing n-1 bits spell i in binary (most significant
// first); entry (i,j) is +1 where bit j of that string is 0 and -1 where it
// is 1. Column 0 is therefore all +1 and the rows enumerate every sign
// pattern that starts with +.
inline int sign_entry(int n, int row, int col) {
    if (col == 0) return 1;
    return ((row >> (n - 1 - col)) & 1) ? -1 : 1;
}

class SignMatrix {
public:
    explicit SignMatrix(int n);

    int n() const { return n_; }
    int rows() const { return 1 << (n_ - 1); }
    int cols() const { return n_; }
    int sign(int row, int col) const { return entries_[static_cast<size_t>(row) * n_ + col]; }

private:
    int n_;
    std::vector<int8_t> entries_;
};

SignMatrix sign_matrix(int n);

// Highest value of K reachable without the no-signaling-in-time constraints
// failing, i.e. with every correlator saturated at its sign: n * 2^(n-1).
double nosignaling_max(int n);

// One concrete set of measurement directions for the K_{n->1} scenario.
// input_state defaults to the zero vector (maximally mixed qubit).
struct TemporalStrategy {
    int n = 0;
    std::vector<BlochVector> alice_axes; // 2^(n-1) settings
    std::vector<BlochVector> bob_axes;   // n settings
    BlochVector input_state;

    void validate() const; // throws on size/norm violations
};

struct CorrelationTable {
    int n = 0;
    std::vector<double> values; // row-major, rows() x n

    double c(int row, int col) const { return values[static_cast<size_t>(row) * n + col]; }
};

// P(a, b | alice_axis, bob_axis) for the sequential measurement: Alice's
// outcome probability times Bob's probability on the collapsed state. Zero
// whenever Alice's branch has probability zero (nothing to condition on).
double joint_probability(const BlochVector& input_state, const BlochVector& alice_axis,
                         const BlochVector& bob_axis, int a, int b);

// Two-time correlator C = sum_{a,b} (-1)^(a xor b) P(a,b). Computed by the
// full four-outcome sum; the closed form a.b for the maximally mixed input is
// kept to cross-checks in the tests.
double two_time_correlator(const BlochVector& input_state, const BlochVector& alice_axis,
                           const BlochVector& bob_axis);

CorrelationTable correlation_table(const TemporalStrategy& strategy);

// K = sum_ij sign(i,j) C_ij.
double evaluate_K(const TemporalStrategy& strategy);

} // namespace trac
