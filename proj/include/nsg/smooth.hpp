#pragma once

#include "nsg/semigroup.hpp"
#include "nsg/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nsg {

/// d/c data for a generator sequence plus the smoothness verdict. Each
/// certificate (present only when smooth) is a witness combination over
/// the prefix showing c_i * g_i in <g_0, ..., g_{i-1}>.
struct SmoothAnalysis {
    std::vector<std::uint64_t> sequence;   // g_0, ..., g_k
    std::vector<std::uint64_t> d_values;   // d_i = gcd(g_0..g_i)
    std::vector<std::uint64_t> c_values;   // c_i = d_{i-1}/d_i, i = 1..k
    bool is_smooth = false;
    std::vector<std::vector<std::uint64_t>> certificates; // one per i = 1..k

    std::size_t k() const { return sequence.size() - 1; }
    std::uint64_t g0() const { return sequence.front(); }
    bool coprime() const { return d_values.back() == 1; }

    NumericalSemigroup semigroup() const; // requires coprime()
};

struct SuitablePair {
    std::vector<std::uint64_t> a;
    std::vector<std::uint64_t> b;
};

/// The unique coordinates (n_0, ..., n_k) of an integer relative to a
/// smooth sequence; 0 <= n_i < c_i for i >= 1, n_0 may be negative.
struct DigitRepresentation {
    std::vector<std::int64_t> digits;
    std::vector<std::uint64_t> sequence;

    Int reconstruct() const;
};

enum class Classification { NotInSemigroup, InSemigroup, InApery };

SmoothAnalysis analyze_sequence(const std::vector<std::uint64_t>& seq);

// Validates suitability (gcd(a_i, b_j) = 1 for i >= j) and expands
// g_i = b_1...b_i a_{i+1}...a_k.
std::vector<std::uint64_t> compound_from_pair(const SuitablePair& pair);

// Recovers (A, B) from consecutive gcds for the given order; accepts iff
// the reconstruction reproduces seq and the pair is suitable.
std::optional<SuitablePair> detect_compound(const std::vector<std::uint64_t>& seq);

// Tries all orderings (at most 8 elements).
std::optional<std::pair<std::vector<std::uint64_t>, SuitablePair>>
detect_compound_set(const std::vector<std::uint64_t>& set);

// rho_j reverses the first j+1 entries of a compound sequence; the result
// is smooth with c values (b_j, ..., b_1, a_{j+1}, ..., a_k).
struct RhoResult {
    std::vector<std::uint64_t> sequence;
    std::vector<std::uint64_t> c_values;
};
RhoResult permute_rho(const std::vector<std::uint64_t>& compound_seq, std::size_t j);

// Digit extraction from the top down via modular inverses. Requires a
// smooth, gcd-1 analysis.
DigitRepresentation unique_representation(const SmoothAnalysis& analysis, std::int64_t n);

// n_0 < 0 / = 0 / > 0 maps to NotInSemigroup / InApery / InSemigroup.
Classification classify(const SmoothAnalysis& analysis, std::int64_t n);

// Ap(S; g_0) = { sum n_i g_i : 0 <= n_i < c_i } enumerated directly.
AperySet explicit_apery(const SmoothAnalysis& analysis);

} // namespace nsg
