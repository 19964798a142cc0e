#include "nsg/verify.hpp"

#include "nsg/identity.hpp"
#include "nsg/sylvester.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nsg {

NumericalSemigroup random_semigroup(std::mt19937_64& rng, std::size_t max_generators,
                                    std::uint64_t max_value) {
    std::uniform_int_distribution<std::size_t> count_dist(2, max_generators);
    std::uniform_int_distribution<std::uint64_t> value_dist(2, max_value);
    for (;;) {
        std::vector<std::uint64_t> gens(count_dist(rng));
        for (auto& g : gens) g = value_dist(rng);
        if (gcd_of(gens) != 1) continue;
        return NumericalSemigroup::make(std::move(gens));
    }
}

namespace {
constexpr std::uint64_t kSmallPrimes[] = {2, 3, 5, 7, 11, 13};

Int compound_frobenius(const SuitablePair& pair, const std::vector<std::uint64_t>& seq) {
    Int f = -Int(seq[0]);
    for (std::size_t i = 1; i < seq.size(); ++i) f += (Int(pair.a[i - 1]) - 1) * seq[i];
    return f;
}
} // namespace

CompoundInstance random_compound(std::mt19937_64& rng, std::uint64_t frobenius_cap) {
    std::uniform_int_distribution<std::size_t> k_dist(1, 3);
    std::uniform_int_distribution<std::uint32_t> exp_dist(1, 2);
    for (;;) {
        std::size_t k = k_dist(rng);
        std::vector<std::uint64_t> primes(std::begin(kSmallPrimes), std::end(kSmallPrimes));
        std::shuffle(primes.begin(), primes.end(), rng);
        std::size_t split = 3; // first 3 primes feed A, the rest feed B
        std::uniform_int_distribution<std::size_t> a_pick(0, split - 1);
        std::uniform_int_distribution<std::size_t> b_pick(split, primes.size() - 1);

        SuitablePair pair;
        for (std::size_t i = 0; i < k; ++i) {
            std::uint64_t pa = primes[a_pick(rng)], pb = primes[b_pick(rng)];
            std::uint64_t a = pa, b = pb;
            if (exp_dist(rng) == 2) a *= pa;
            if (exp_dist(rng) == 2) b *= pb;
            pair.a.push_back(a);
            pair.b.push_back(b);
        }
        std::vector<std::uint64_t> seq;
        try {
            seq = compound_from_pair(pair);
        } catch (const Error&) {
            continue;
        }
        if (compound_frobenius(pair, seq) > Int(frobenius_cap)) continue;
        return CompoundInstance{std::move(pair), std::move(seq)};
    }
}

std::vector<std::uint64_t> random_smooth(std::mt19937_64& rng, std::uint64_t frobenius_cap) {
    CompoundInstance inst = random_compound(rng, frobenius_cap);
    std::uniform_int_distribution<std::size_t> j_dist(0, inst.sequence.size() - 1);
    return permute_rho(inst.sequence, j_dist(rng)).sequence;
}

bool set_equalities_hold(const NumericalSemigroup& s, std::uint64_t t) {
    const auto& gaps = s.gaps().gaps;
    const AperySet& ap = s.apery_set(t);

    std::set<std::uint64_t> nr(gaps.begin(), gaps.end());
    std::set<std::uint64_t> nr_plus_t;
    for (auto n : gaps) nr_plus_t.insert(n + t);
    std::set<std::uint64_t> apery(ap.elements.begin(), ap.elements.end());
    auto below = ap.below_t();
    std::set<std::uint64_t> ap_t(below.begin(), below.end());

    auto diff = [](const std::set<std::uint64_t>& x, const std::set<std::uint64_t>& y) {
        std::set<std::uint64_t> out;
        std::set_difference(x.begin(), x.end(), y.begin(), y.end(),
                            std::inserter(out, out.begin()));
        return out;
    };

    std::set<std::uint64_t> interval;
    for (std::uint64_t n = 0; n < t; ++n) interval.insert(n);

    return diff(nr_plus_t, nr) == diff(apery, ap_t) &&
           diff(nr, nr_plus_t) == diff(interval, ap_t);
}

namespace {

std::vector<TestFunction> function_family() {
    std::vector<TestFunction> fs;
    for (std::uint32_t m = 0; m <= 5; ++m) fs.push_back(TestFunction::monomial(m));
    fs.push_back(TestFunction::exponential(Rat(2)));
    for (std::uint32_t m = 0; m <= 3; ++m) fs.push_back(TestFunction::signed_monomial(m));
    return fs;
}

std::string describe_gens(const NumericalSemigroup& s) {
    std::ostringstream out;
    out << "<";
    const auto& g = s.generators();
    for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "," : "") << g[i];
    out << ">";
    return out.str();
}

std::string describe_seq(const std::vector<std::uint64_t>& seq) {
    std::ostringstream out;
    for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? "," : "") << seq[i];
    return out.str();
}

} // namespace

VerifyResult run_verify(const VerifyOptions& opts) {
    VerifyResult res;
    std::mt19937_64 rng(opts.seed);
    const auto family = function_family();

    auto fail = [&res](const std::string& msg) { res.failures.push_back(msg); };

    // Identity + set equalities + genus recovery over random semigroups.
    for (std::uint64_t it = 0; it < opts.count; ++it) {
        NumericalSemigroup s = random_semigroup(rng);
        std::int64_t f = s.frobenius();
        for (std::uint64_t t = 1; t <= 60; ++t) {
            if (!s.contains(static_cast<std::int64_t>(t))) continue;
            for (const auto& fn : family) {
                ++res.checks;
                if (!identity_sides(s, t, fn).holds)
                    fail("identity failed for " + describe_gens(s) + " t=" +
                         std::to_string(t) + " f=" + fn.describe());
            }
            ++res.checks;
            if (genus_from_identity(s, t) != s.genus())
                fail("genus mismatch for " + describe_gens(s) + " t=" + std::to_string(t));
            if (static_cast<std::int64_t>(t) <=
                f + static_cast<std::int64_t>(s.min_generator())) {
                ++res.checks;
                if (!set_equalities_hold(s, t))
                    fail("set equalities failed for " + describe_gens(s) +
                         " t=" + std::to_string(t));
            }
        }
    }

    // Closed forms against the enumeration oracle on compound and
    // rho-permuted smooth instances.
    for (std::uint64_t it = 0; it < opts.count; ++it) {
        std::vector<std::uint64_t> seq = (it % 2 == 0)
                                             ? random_compound(rng, 1000000).sequence
                                             : random_smooth(rng, 1000000);
        ++res.checks;
        try {
            SylvesterReport rep = invariant_report(seq); // throws on disagreement
            if (!rep.symmetric)
                fail("smooth sequence not symmetric: " + describe_seq(seq));
        } catch (const InternalError& e) {
            fail(std::string(e.what()) + " for " + describe_seq(seq));
        }
    }

    return res;
}

} // namespace nsg
