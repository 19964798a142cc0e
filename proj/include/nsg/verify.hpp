#pragma once

#include "nsg/semigroup.hpp"
#include "nsg/smooth.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace nsg {

// Random instances for the property suites. Everything is driven by the
// caller's engine, so a fixed seed reproduces the exact run.

NumericalSemigroup random_semigroup(std::mt19937_64& rng,
                                    std::size_t max_generators = 4,
                                    std::uint64_t max_value = 30);

// Samples a suitable pair with entries that are powers of small primes
// (disjoint prime pools for A and B keep the pair suitable), rejecting
// instances whose Frobenius number exceeds the cap.
struct CompoundInstance {
    SuitablePair pair;
    std::vector<std::uint64_t> sequence;
};
CompoundInstance random_compound(std::mt19937_64& rng, std::uint64_t frobenius_cap);

// A compound instance pushed through a random rho_j: smooth but not
// necessarily compound.
std::vector<std::uint64_t> random_smooth(std::mt19937_64& rng, std::uint64_t frobenius_cap);

// The two finite-set identities relating NR, NR + t and the Apery set.
bool set_equalities_hold(const NumericalSemigroup& s, std::uint64_t t);

struct VerifyOptions {
    std::uint64_t count = 100;
    std::uint64_t seed = 1;
};

struct VerifyResult {
    std::uint64_t checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Randomized property suite: the Apery identity over the function family,
// the set-equality lemma, and closed forms against the enumeration oracle.
VerifyResult run_verify(const VerifyOptions& opts);

} // namespace nsg
