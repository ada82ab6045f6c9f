#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace trac {

// One vertex of the macrorealist polytope: every observable has a definite
// +/-1 value, so C_ij = alice_values[i] * bob_values[j].
struct DeterministicAssignment {
    std::vector<int> alice_values; // 2^(n-1) entries, +1/-1
    std::vector<int> bob_values;   // n entries, +1/-1
};

struct ClassicalKBound {
    double k = 0.0;
    DeterministicAssignment assignment;
};

// Deterministic n->1 code: a full encoding table {0,1}^n -> {0,1} plus one
// decoding map {0,1} -> {0,1} per queried position.
struct DeterministicRacStrategy {
    std::vector<std::uint8_t> encoding;              // 2^n entries
    std::vector<std::array<std::uint8_t, 2>> decodings; // n maps
};

struct ClassicalFBound {
    double f = 0.0;
    DeterministicRacStrategy strategy;
};

// Exact max of K over deterministic assignments, 2 <= n <= 20. Alice's layer
// is optimized in closed form (her best value per setting is the sign of the
// signed Bob sum), so only the 2^n Bob assignments are enumerated. Ties are
// broken toward the lexicographically lowest Bob assignment (+1 sorts before
// -1); zero row sums take alice value +1.
ClassicalKBound max_K_deterministic(int n);

// Exact max of F over all deterministic encodings x decodings, 2 <= n <= 4
// (2^(2^n) * 4^n strategies; n = 5 would already need 2^32 encodings, so
// larger n raises ResourceLimitError and callers fall back to the majority
// bound below).
ClassicalFBound max_F_deterministic(int n);

// F of the majority-vote encoding (ties toward 0) with per-position optimal
// decodings; a lower bound on the deterministic optimum, valid for any
// 2 <= n <= 20.
ClassicalFBound majority_F_lower_bound(int n);

struct AuditRow {
    std::string quantity;
    double paper_value = 0.0;
    double computed_value = 0.0;
    double delta = 0.0;
    std::string flag;
};

struct AuditReport {
    int n = 0;
    std::vector<AuditRow> rows;

    std::string to_csv() const;  // header: quantity,paper_value,computed_value,delta,flag
    std::string to_text() const;
};

// Compares the claimed classical bounds (2^(n-1) for K, (1+1/n)/2 for F)
// against the enumeration results, and checks that the F optimum maps onto
// the K optimum through K = n 2^n (F - 1/2). Rows are flagged at 1e-9. For
// n > 4 the F row holds the majority lower bound and is flagged as such.
AuditReport audit_bounds(int n);

} // namespace trac
