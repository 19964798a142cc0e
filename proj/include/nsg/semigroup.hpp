#pragma once

#include "nsg/errors.hpp"
#include "nsg/types.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace nsg {

/// Gaps of a semigroup: the positive integers with no representation over
/// the generators. frobenius is -1 when there are none.
struct GapSet {
    std::vector<std::uint64_t> gaps; // sorted ascending
    std::int64_t frobenius = -1;

    std::uint64_t genus() const { return gaps.size(); }
    bool contains(std::uint64_t n) const;
};

/// Apery set of t: the minimal element of S in each residue class mod t,
/// indexed by residue. elements[0] is always 0.
struct AperySet {
    std::uint64_t t = 0;
    std::vector<std::uint64_t> elements; // elements[r] = min{s in S : s = r mod t}

    // The subset lying strictly below t (the paper's Ap_t).
    std::vector<std::uint64_t> below_t() const;
    std::uint64_t max() const;
    Int sum() const;
};

/// A numerical semigroup given by an (arbitrary, not necessarily minimal)
/// generating set with gcd 1. Immutable; gap and Apery computations are
/// cached under a write-once discipline, so values are safe to share
/// across threads.
class NumericalSemigroup {
public:
    static NumericalSemigroup make(std::vector<std::uint64_t> generators);

    const std::vector<std::uint64_t>& generators() const { return gens_; }
    std::uint64_t min_generator() const { return gens_.front(); }
    bool is_full() const { return gens_.front() == 1; }

    bool contains(std::int64_t n) const;
    const GapSet& gaps() const;

    std::uint64_t genus() const { return gaps().genus(); }
    std::int64_t frobenius() const { return gaps().frobenius; }

    // Apery set of t via shortest paths on the residue graph mod t.
    // Requires t in S, t != 0.
    const AperySet& apery_set(std::uint64_t t) const;

    // F(S) = max(Ap(S;t)) - t; returns -1 for the full semigroup.
    std::int64_t frobenius_via_apery(std::uint64_t t) const;

    // g(S) = -(t-1)/2 + (1/t) sum(Ap(S;t)), exact rationals internally.
    std::uint64_t genus_via_apery(std::uint64_t t) const;

    // True iff F = 2g - 1. The full semigroup reports false.
    bool is_symmetric() const;

private:
    explicit NumericalSemigroup(std::vector<std::uint64_t> gens);

    std::vector<std::uint64_t> gens_; // sorted, deduplicated, gcd 1

    struct Cache {
        std::once_flag gaps_once;
        std::optional<GapSet> gaps;
        std::mutex apery_mutex;
        std::map<std::uint64_t, AperySet> apery;
    };
    std::shared_ptr<Cache> cache_;
};

} // namespace nsg
