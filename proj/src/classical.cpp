#include "trac/classical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <future>
#include <thread>

#include "trac/errors.hpp"

namespace trac {

namespace {

void require_k_range(int n) {
    if (n < 2 || n > 20) {
        throw ResourceLimitError("max_K_deterministic: n = " + std::to_string(n) +
                                 " outside the supported range [2, 20]");
    }
}

// Bob assignment index m <-> value vector: element j is +1 when bit (n-1-j)
// of m is 0, so ascending m is ascending lexicographic order on the vector.
std::vector<int> bob_values_of_index(int n, std::uint32_t m) {
    std::vector<int> b(n);
    for (int j = 0; j < n; ++j) b[j] = ((m >> (n - 1 - j)) & 1) ? -1 : 1;
    return b;
}

struct KCandidate {
    std::int64_t k = -1;
    std::uint32_t bob_index = 0;
};

// Best K over all Bob assignments whose trailing n-1 bits fall in
// [tail_begin, tail_end); both leading-element choices of each tail are
// scored. sums[i] caches the signed Bob sum of row i restricted to the
// trailing columns, built by flipping one column off a smaller mask.
KCandidate scan_tails(int n, std::uint32_t tail_begin, std::uint32_t tail_end) {
    const std::uint32_t rows = 1u << (n - 1);
    std::vector<std::int32_t> sums(rows);
    KCandidate best;
    for (std::uint32_t t = tail_begin; t < tail_end; ++t) {
        std::int32_t base = 0;
        for (int j = 1; j < n; ++j) base += ((t >> (n - 1 - j)) & 1) ? -1 : 1;
        sums[0] = base;
        for (std::uint32_t i = 1; i < rows; ++i) {
            const int l = std::countr_zero(i);
            const std::int32_t bj = ((t >> l) & 1) ? -1 : 1;
            // row i differs from row i^(1<<l) exactly in the sign of column n-1-l
            sums[i] = sums[i ^ (1u << l)] - 2 * bj;
        }
        std::int64_t k_plus = 0, k_minus = 0;
        for (std::uint32_t i = 0; i < rows; ++i) {
            k_plus += std::abs(1 + sums[i]);
            k_minus += std::abs(-1 + sums[i]);
        }
        const std::uint32_t m_plus = t;                // leading element +1
        const std::uint32_t m_minus = rows | t;        // leading element -1
        if (k_plus > best.k || (k_plus == best.k && m_plus < best.bob_index))
            best = {k_plus, m_plus};
        if (k_minus > best.k || (k_minus == best.k && m_minus < best.bob_index))
            best = {k_minus, m_minus};
    }
    return best;
}

int string_bit(int n, int x, int y) { return (x >> (n - 1 - y)) & 1; }

// Success count of decoding map d at position y, given how often the encoded
// bit agrees with the queried bit (matches = #{x : e(x) = x_y}).
int decoding_count(int d, int half, int total, int matches) {
    const int d0 = d & 1, d1 = (d >> 1) & 1;
    if (d0 == d1) return half; // constant map hits exactly the strings with x_y = d0
    if (d0 == 0) return matches;      // identity
    return total - matches;           // negation
}

ClassicalFBound bound_from_counts(int n, const std::vector<std::uint8_t>& encoding,
                                  const std::vector<int>& matches,
                                  const std::vector<int>& chosen_maps) {
    const int total = 1 << n;
    const int half = total / 2;
    ClassicalFBound out;
    out.strategy.encoding = encoding;
    long long hits = 0;
    for (int y = 0; y < n; ++y) {
        const int d = chosen_maps[y];
        out.strategy.decodings.push_back({static_cast<std::uint8_t>(d & 1),
                                          static_cast<std::uint8_t>((d >> 1) & 1)});
        hits += decoding_count(d, half, total, matches[y]);
    }
    out.f = static_cast<double>(hits) / (static_cast<double>(n) * total);
    return out;
}

} // namespace

ClassicalKBound max_K_deterministic(int n) {
    require_k_range(n);
    const std::uint32_t tails = 1u << (n - 1);

    KCandidate best;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (n >= 15 && hw > 1) {
        const std::uint32_t chunks = std::min<std::uint32_t>(hw, tails);
        std::vector<std::future<KCandidate>> parts;
        for (std::uint32_t c = 0; c < chunks; ++c) {
            const std::uint32_t lo = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(tails) * c) / chunks);
            const std::uint32_t hi = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(tails) * (c + 1)) / chunks);
            parts.push_back(std::async(std::launch::async, scan_tails, n, lo, hi));
        }
        for (auto& p : parts) {
            const KCandidate cand = p.get();
            if (cand.k > best.k || (cand.k == best.k && cand.bob_index < best.bob_index))
                best = cand;
        }
    } else {
        best = scan_tails(n, 0, tails);
    }

    ClassicalKBound out;
    out.k = static_cast<double>(best.k);
    out.assignment.bob_values = bob_values_of_index(n, best.bob_index);
    const std::uint32_t rows = 1u << (n - 1);
    out.assignment.alice_values.resize(rows);
    for (std::uint32_t i = 0; i < rows; ++i) {
        int sum = 0;
        for (int j = 0; j < n; ++j) {
            const int sign = (j == 0) ? 1 : (((i >> (n - 1 - j)) & 1) ? -1 : 1);
            sum += sign * out.assignment.bob_values[j];
        }
        out.assignment.alice_values[i] = (sum >= 0) ? 1 : -1;
    }
    return out;
}

ClassicalFBound max_F_deterministic(int n) {
    if (n < 2) {
        throw InvalidScenarioError("max_F_deterministic: n must be >= 2, got " +
                                   std::to_string(n));
    }
    if (n > 4) {
        throw ResourceLimitError("max_F_deterministic: exhaustive search supports n <= 4 only "
                                 "(2^(2^n) encodings); use majority_F_lower_bound for n = " +
                                 std::to_string(n));
    }
    const int total = 1 << n;
    const int half = total / 2;
    const std::uint64_t encodings = 1ull << total;
    const int combos = 1 << (2 * n); // 4^n decoding tuples, position 0 most significant

    long long best_hits = -1;
    std::uint64_t best_encoding = 0;
    int best_combo = 0;
    std::vector<int> matches(n);
    for (std::uint64_t em = 0; em < encodings; ++em) {
        for (int y = 0; y < n; ++y) {
            int m = 0;
            for (int x = 0; x < total; ++x)
                m += (static_cast<int>((em >> x) & 1) == string_bit(n, x, y));
            matches[y] = m;
        }
        for (int combo = 0; combo < combos; ++combo) {
            long long hits = 0;
            for (int y = 0; y < n; ++y)
                hits += decoding_count((combo >> (2 * (n - 1 - y))) & 3, half, total, matches[y]);
            if (hits > best_hits) {
                best_hits = hits;
                best_encoding = em;
                best_combo = combo;
            }
        }
    }

    std::vector<std::uint8_t> encoding(total);
    for (int x = 0; x < total; ++x) encoding[x] = static_cast<std::uint8_t>((best_encoding >> x) & 1);
    std::vector<int> chosen(n);
    for (int y = 0; y < n; ++y) {
        const int d = (best_combo >> (2 * (n - 1 - y))) & 3;
        chosen[y] = d;
        matches[y] = 0;
        for (int x = 0; x < total; ++x)
            matches[y] += (static_cast<int>(encoding[x]) == string_bit(n, x, y));
    }
    return bound_from_counts(n, encoding, matches, chosen);
}

ClassicalFBound majority_F_lower_bound(int n) {
    require_k_range(n);
    const int total = 1 << n;
    const int half = total / 2;
    std::vector<std::uint8_t> encoding(total);
    for (int x = 0; x < total; ++x)
        encoding[x] = 2 * std::popcount(static_cast<unsigned>(x)) > n ? 1 : 0;
    std::vector<int> matches(n, 0), chosen(n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < total; ++x)
            matches[y] += (static_cast<int>(encoding[x]) == string_bit(n, x, y));
    for (int y = 0; y < n; ++y) {
        int best_d = 0;
        long long best_c = -1;
        for (int d = 0; d < 4; ++d) {
            const int c = decoding_count(d, half, total, matches[y]);
            if (c > best_c) {
                best_c = c;
                best_d = d;
            }
        }
        chosen[y] = best_d;
    }
    return bound_from_counts(n, encoding, matches, chosen);
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

std::string AuditReport::to_csv() const {
    std::string out = "quantity,paper_value,computed_value,delta,flag\n";
    for (const auto& row : rows) {
        out += row.quantity + ',' + format_double(row.paper_value) + ',' +
               format_double(row.computed_value) + ',' + format_double(row.delta) + ',' +
               row.flag + '\n';
    }
    return out;
}

std::string AuditReport::to_text() const {
    std::string out = "audit n=" + std::to_string(n) + "\n";
    for (const auto& row : rows) {
        out += "  " + row.quantity + ": claimed " + format_double(row.paper_value) +
               ", computed " + format_double(row.computed_value) + ", delta " +
               format_double(row.delta) + " [" + row.flag + "]\n";
    }
    return out;
}

AuditReport audit_bounds(int n) {
    require_k_range(n);
    AuditReport report;
    report.n = n;

    const ClassicalKBound kb = max_K_deterministic(n);
    const double k_claimed = static_cast<double>(1 << (n - 1));
    report.rows.push_back({"classical_K_max", k_claimed, kb.k, kb.k - k_claimed,
                           std::fabs(kb.k - k_claimed) <= 1e-9 ? "match" : "differ"});

    const bool exhaustive = n <= 4;
    const ClassicalFBound fb = exhaustive ? max_F_deterministic(n) : majority_F_lower_bound(n);
    const double f_claimed = 0.5 * (1.0 + 1.0 / n);
    report.rows.push_back({exhaustive ? "classical_F_max" : "classical_F_majority_lower_bound",
                           f_claimed, fb.f, fb.f - f_claimed,
                           std::fabs(fb.f - f_claimed) <= 1e-9 ? "match" : "differ"});

    // The two enumerations are independent; they must agree through the
    // affine bridge between the figures of merit.
    const double mapped = static_cast<double>(n) * (1 << n) * (fb.f - 0.5);
    std::string flag = std::fabs(mapped - kb.k) <= 1e-9 ? "consistent" : "inconsistent";
    if (!exhaustive) flag += "_lower_bound";
    report.rows.push_back({"bridge_K_of_F", kb.k, mapped, mapped - kb.k, flag});
    return report;
}

} // namespace trac
