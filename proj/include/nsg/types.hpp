#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

namespace nsg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Asserts the rational is an integer and returns it.
Int require_integral(const Rat& r, const char* where);

// Enumeration guard: gap enumeration refuses to materialize gap sets whose
// Frobenius number would exceed this bound. Overridable via the CLI or the
// NSG_ENUM_CAP environment variable.
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

inline std::uint64_t gcd_of(const std::vector<std::uint64_t>& v) {
    std::uint64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g;
}

} // namespace nsg
