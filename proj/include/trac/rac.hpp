#pragma once

#include <vector>

#include "trac/bloch.hpp"
#include "trac/temporal.hpp"

namespace trac {

// n->1 random access code over one qubit. The sender encodes an n-bit string
// x into a pure state, the receiver measures along decoding axis y to guess
// bit x_y. Complementary strings get antipodal states, so one axis per
// leading-bit-0 representative determines the whole encoding: axis index i
// stands for the string 0 . bits(i), and its complement maps to -axis.
struct RacStrategy {
    int n = 0;
    std::vector<BlochVector> encoding_axes; // 2^(n-1), indexed by representative
    std::vector<BlochVector> decoding_axes; // n

    void validate() const;
};

// The pure state prepared for string x (0 <= x < 2^n, bit 0 of the string is
// the most significant bit of x).
BlochVector encoding_state(const RacStrategy& strategy, int x);

// Average success probability over uniform string and position:
//   F = (1 / (n 2^n)) sum_{x,y} P(guess = x_y | x, y)
// evaluated term by term through projector overlaps with the prepared state.
// Algebraically F = 1/2 + (sum_ij sign(i,j) a_i.b_j) / (n 2^n), which ties F
// to the temporal quantity K below.
double success_probability(const RacStrategy& strategy);

// Affine bridge between the two figures of merit: K = n 2^n F - n 2^(n-1).
double k_from_f(int n, double f);
double f_from_k(int n, double k);

// The same axes read as the two pictures of one experiment. Round trip is the
// identity; rac_to_temporal uses the maximally mixed input state.
TemporalStrategy rac_to_temporal(const RacStrategy& strategy);
RacStrategy temporal_to_rac(const TemporalStrategy& strategy);

} // namespace trac
