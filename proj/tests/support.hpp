#pragma once

// Brute-force oracles used by the tests. These stay independent of the
// library's computation paths: membership is a plain DP table, gap sets
// come from a linear scan, Apery sets from a per-residue scan.

#include "nsg/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

inline std::vector<bool> membership_table(const std::vector<std::uint64_t>& gens,
                                          std::uint64_t limit) {
    std::vector<bool> in_s(static_cast<std::size_t>(limit) + 1, false);
    in_s[0] = true;
    for (std::uint64_t n = 1; n <= limit; ++n)
        for (auto g : gens)
            if (g <= n && in_s[static_cast<std::size_t>(n - g)]) {
                in_s[static_cast<std::size_t>(n)] = true;
                break;
            }
    return in_s;
}

inline bool member(const std::vector<std::uint64_t>& gens, std::int64_t n) {
    if (n < 0) return false;
    return membership_table(gens, static_cast<std::uint64_t>(n))
        [static_cast<std::size_t>(n)];
}

// Gaps by scanning until min(gens) consecutive members have been seen.
inline std::vector<std::uint64_t> gaps(const std::vector<std::uint64_t>& gens) {
    std::uint64_t g0 = gens[0];
    for (auto g : gens) g0 = std::min(g0, g);
    if (g0 == 1) return {};
    // grow the table until the tail of length g0 is all-members
    std::uint64_t limit = 64;
    for (;;) {
        auto table = membership_table(gens, limit);
        std::uint64_t run = 0;
        std::vector<std::uint64_t> out;
        for (std::uint64_t n = 1; n <= limit; ++n) {
            if (table[static_cast<std::size_t>(n)]) {
                if (++run == g0) return out;
            } else {
                run = 0;
                out.push_back(n);
            }
        }
        limit *= 2;
    }
}

inline std::int64_t frobenius(const std::vector<std::uint64_t>& gens) {
    auto g = gaps(gens);
    return g.empty() ? -1 : static_cast<std::int64_t>(g.back());
}

// Minimal member of each residue class mod t, by direct scan.
inline std::vector<std::uint64_t> apery(const std::vector<std::uint64_t>& gens,
                                        std::uint64_t t) {
    std::int64_t f = frobenius(gens);
    auto table = membership_table(gens, static_cast<std::uint64_t>(f + 1) + t);
    std::vector<std::uint64_t> out(t);
    for (std::uint64_t r = 0; r < t; ++r) {
        std::uint64_t n = r;
        while (!table[static_cast<std::size_t>(n)]) n += t;
        out[static_cast<std::size_t>(r)] = n;
    }
    return out;
}

// Power sums over the gap set.
inline nsg::Int power_sum(const std::vector<std::uint64_t>& gaps_list, std::uint32_t m,
                          bool alternating) {
    nsg::Int acc = 0;
    for (auto n : gaps_list) {
        nsg::Int p = 1;
        for (std::uint32_t i = 0; i < m; ++i) p *= n;
        if (alternating && n % 2 == 1) acc -= p;
        else acc += p;
    }
    return acc;
}

// Exhaustive digit search: all tuples with 0 <= n_i < c_i and the implied
// n_0; returns the digits for n if a representation exists in the searched
// box, checking uniqueness along the way.
inline std::optional<std::vector<std::int64_t>>
digit_search(const std::vector<std::uint64_t>& seq, const std::vector<std::uint64_t>& c,
             std::int64_t n) {
    std::size_t k = seq.size() - 1;
    std::vector<std::uint64_t> digit(k + 1, 0);
    std::optional<std::vector<std::int64_t>> found;
    int hits = 0;
    for (;;) {
        std::int64_t rest = n;
        for (std::size_t i = 1; i <= k; ++i)
            rest -= static_cast<std::int64_t>(digit[i] * seq[i]);
        if (rest % static_cast<std::int64_t>(seq[0]) == 0) {
            ++hits;
            std::vector<std::int64_t> digits(k + 1);
            digits[0] = rest / static_cast<std::int64_t>(seq[0]);
            for (std::size_t i = 1; i <= k; ++i)
                digits[i] = static_cast<std::int64_t>(digit[i]);
            found = digits;
        }
        std::size_t i = 1;
        for (; i <= k; ++i) {
            if (digit[i] + 1 < c[i - 1]) {
                ++digit[i];
                break;
            }
            digit[i] = 0;
        }
        if (i > k) break;
    }
    if (hits > 1) return std::nullopt; // uniqueness violated: caller asserts
    return found;
}

} // namespace oracle
