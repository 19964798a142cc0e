#pragma once

#include "nsg/smooth.hpp"
#include "nsg/types.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace nsg {

struct PowerSequence {
    std::vector<std::uint64_t> base;
    std::uint32_t exponent = 1;
    std::vector<Int> result;
};

PowerSequence power_sequence(const std::vector<std::uint64_t>& seq, std::uint32_t e);

// sigma_m(g) = sum n^m over [0, g]; tau_m(g) = alternating version.
struct SigmaTau {
    Int sigma;
    Int tau;
};
SigmaTau sigma_tau(std::uint32_t m, std::uint64_t g);

// Genus of <G^e> for a smooth, gcd-1 analysis. Computed by enumeration
// when affordable; otherwise G^e is certified smooth (by raising
// single-term smoothness witnesses to the eth power) and the closed genus
// formula applies. Either way the proof relation
//   sum (c_i^e - 1) g_i^e = 2 S_0(G^e) + g_0^e - 1
// is asserted.
Int genus_of_power(const SmoothAnalysis& analysis, std::uint32_t e);

// Closed-form Sylvester sums for smooth sequences, m in {0, 1, 2}.
Int sylvester_closed(const SmoothAnalysis& analysis, std::uint32_t m);

// Closed-form alternating Sylvester sums for smooth sequences, m in {0,1,2}.
Int alternating_closed(const SmoothAnalysis& analysis, std::uint32_t m);

// T_m(<a,b>) via the two-generator recurrence; b must be odd.
Int wang_wang_T(std::uint64_t a, std::uint64_t b, std::uint32_t m);

// Brute-force sums over the enumerated gap set; the oracle for every
// closed form above.
struct EnumeratedSums {
    Int s;
    Int t;
};
EnumeratedSums sums_by_enumeration(const NumericalSemigroup& s, std::uint32_t m);

// Index of the first odd generator and the indices of even generators
// (the J / I_G data of the alternating formulas).
std::size_t first_odd_index(const std::vector<std::uint64_t>& seq);
std::vector<std::size_t> even_indices(const std::vector<std::uint64_t>& seq);

struct SylvesterReport {
    std::vector<std::uint64_t> sequence;
    std::vector<std::uint64_t> c_values;
    Int genus;
    Int frobenius;
    bool symmetric = false;
    std::size_t j_first_odd = 0;
    std::vector<std::size_t> even_generator_indices;
    std::map<std::uint32_t, Int> s_closed;    // m -> S_m, m <= 2
    std::map<std::uint32_t, Int> s_oracle;    // every requested m
    std::map<std::uint32_t, Int> t_closed;
    std::map<std::uint32_t, Int> t_oracle;
    std::map<std::uint32_t, bool> agreement;  // closed == oracle where both exist
    bool all_agree = true;
};

// Full cross-checked report; extra_m adds enumeration-only rows beyond
// m = 2. Throws InternalError if any closed form disagrees with the
// oracle.
SylvesterReport invariant_report(const std::vector<std::uint64_t>& seq,
                                 const std::vector<std::uint32_t>& extra_m = {});

} // namespace nsg
