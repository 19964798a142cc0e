#include "nsg/smooth.hpp"

#include <algorithm>
#include <numeric>

namespace nsg {

namespace {

// Witness-producing membership test: counts[j] with sum counts[j]*gens[j]
// = target, or nullopt when target is not representable.
std::optional<std::vector<std::uint64_t>>
represent(const std::vector<std::uint64_t>& gens, std::uint64_t target) {
    if (target > enumeration_cap())
        throw EnumerationCapExceeded("membership target " + std::to_string(target) +
                                     " exceeds enumeration cap");
    // choice[n] = index of a generator last used to reach n, -1 unreachable
    std::vector<std::int32_t> choice(static_cast<std::size_t>(target) + 1, -1);
    std::vector<bool> reach(static_cast<std::size_t>(target) + 1, false);
    reach[0] = true;
    for (std::uint64_t n = 1; n <= target; ++n) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
            std::uint64_t g = gens[j];
            if (g <= n && reach[static_cast<std::size_t>(n - g)]) {
                reach[static_cast<std::size_t>(n)] = true;
                choice[static_cast<std::size_t>(n)] = static_cast<std::int32_t>(j);
                break;
            }
        }
    }
    if (!reach[static_cast<std::size_t>(target)]) return std::nullopt;
    std::vector<std::uint64_t> counts(gens.size(), 0);
    for (std::uint64_t n = target; n > 0;) {
        std::int32_t j = choice[static_cast<std::size_t>(n)];
        ++counts[static_cast<std::size_t>(j)];
        n -= gens[static_cast<std::size_t>(j)];
    }
    return counts;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    // extended Euclid; gcd(a, m) = 1 by construction
    std::int64_t r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw InternalError("mod_inverse: arguments not coprime");
    return ((s0 % m) + m) % m;
}

std::uint64_t checked_u64(const Int& v, const char* what) {
    if (v < 0 || v > Int(~0ull)) throw Error(std::string(what) + " overflows 64 bits");
    return static_cast<std::uint64_t>(v);
}

} // namespace

NumericalSemigroup SmoothAnalysis::semigroup() const {
    return NumericalSemigroup::make(sequence);
}

Int DigitRepresentation::reconstruct() const {
    Int v = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) v += Int(digits[i]) * sequence[i];
    return v;
}

SmoothAnalysis analyze_sequence(const std::vector<std::uint64_t>& seq) {
    if (seq.empty()) throw EmptySequence();
    for (auto g : seq)
        if (g == 0) throw ZeroEntry();

    SmoothAnalysis an;
    an.sequence = seq;
    an.d_values.resize(seq.size());
    an.d_values[0] = seq[0];
    for (std::size_t i = 1; i < seq.size(); ++i) {
        an.d_values[i] = std::gcd(an.d_values[i - 1], seq[i]);
        an.c_values.push_back(an.d_values[i - 1] / an.d_values[i]);
    }

    // c_i g_i in <G_{i-1}> iff (c_i g_i)/d_{i-1} lies in the scaled,
    // gcd-1 semigroup <g_0/d_{i-1}, ..., g_{i-1}/d_{i-1}>.
    an.is_smooth = true;
    for (std::size_t i = 1; i < seq.size() && an.is_smooth; ++i) {
        std::uint64_t d = an.d_values[i - 1];
        std::uint64_t c = an.c_values[i - 1];
        std::uint64_t target = checked_u64(Int(c) * seq[i] / d, "smoothness target");
        std::vector<std::uint64_t> scaled(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto& g : scaled) g /= d;
        auto witness = represent(scaled, target);
        if (witness) an.certificates.push_back(std::move(*witness));
        else an.is_smooth = false;
    }
    if (!an.is_smooth) an.certificates.clear();
    return an;
}

std::vector<std::uint64_t> compound_from_pair(const SuitablePair& pair) {
    if (pair.a.size() != pair.b.size()) throw Error("A and B must have equal length");
    const std::size_t k = pair.a.size();
    for (auto x : pair.a)
        if (x == 0) throw ZeroEntry();
    for (auto x : pair.b)
        if (x == 0) throw ZeroEntry();
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= i; ++j) {
            std::uint64_t g = std::gcd(pair.a[i - 1], pair.b[j - 1]);
            if (g != 1) throw UnsuitablePair(i, j, g);
        }

    std::vector<std::uint64_t> seq;
    for (std::size_t i = 0; i <= k; ++i) {
        Int v = 1;
        for (std::size_t j = 0; j < i; ++j) v *= pair.b[j];
        for (std::size_t j = i; j < k; ++j) v *= pair.a[j];
        seq.push_back(checked_u64(v, "compound sequence entry"));
    }
    return seq;
}

std::optional<SuitablePair> detect_compound(const std::vector<std::uint64_t>& seq) {
    if (seq.empty()) return std::nullopt;
    for (auto g : seq)
        if (g == 0) throw ZeroEntry();
    if (seq.size() == 1)
        return seq[0] == 1 ? std::optional<SuitablePair>(SuitablePair{}) : std::nullopt;

    // g_{i-1}/g_i = a_i/b_i in lowest terms
    SuitablePair pair;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        std::uint64_t d = std::gcd(seq[i - 1], seq[i]);
        pair.a.push_back(seq[i - 1] / d);
        pair.b.push_back(seq[i] / d);
    }
    try {
        if (compound_from_pair(pair) != seq) return std::nullopt;
    } catch (const UnsuitablePair&) {
        return std::nullopt;
    } catch (const Error&) {
        return std::nullopt;
    }
    return pair;
}

std::optional<std::pair<std::vector<std::uint64_t>, SuitablePair>>
detect_compound_set(const std::vector<std::uint64_t>& set) {
    if (set.size() > 8) throw SequenceTooLongForSetSearch();
    std::vector<std::uint64_t> perm = set;
    std::sort(perm.begin(), perm.end());
    do {
        if (auto pair = detect_compound(perm)) return std::make_pair(perm, *pair);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

RhoResult permute_rho(const std::vector<std::uint64_t>& compound_seq, std::size_t j) {
    auto pair = detect_compound(compound_seq);
    if (!pair) throw NotCompoundInput();
    const std::size_t k = compound_seq.size() - 1;
    if (j > k) throw IndexOutOfRange();

    RhoResult out;
    out.sequence = compound_seq;
    std::reverse(out.sequence.begin(), out.sequence.begin() + static_cast<std::ptrdiff_t>(j + 1));
    for (std::size_t i = j; i >= 1; --i) out.c_values.push_back(pair->b[i - 1]);
    for (std::size_t i = j + 1; i <= k; ++i) out.c_values.push_back(pair->a[i - 1]);
    return out;
}

DigitRepresentation unique_representation(const SmoothAnalysis& analysis, std::int64_t n) {
    if (!analysis.is_smooth) throw NotSmooth();
    if (!analysis.coprime()) throw NotCoprime();

    const auto& g = analysis.sequence;
    const std::size_t k = analysis.k();
    DigitRepresentation rep;
    rep.sequence = g;
    rep.digits.assign(k + 1, 0);

    Int r = n;
    for (std::size_t i = k; i >= 1; --i) {
        std::uint64_t c = analysis.c_values[i - 1];
        if (c == 1) continue;
        std::uint64_t di = analysis.d_values[i];
        if (r % di != 0) throw InternalError("unique_representation: remainder not divisible by d_i");
        Int q = r / di;
        std::int64_t qm = static_cast<std::int64_t>((q % c + c) % c);
        std::int64_t gi = static_cast<std::int64_t>((g[i] / di) % c);
        std::int64_t digit = (qm * mod_inverse(gi, static_cast<std::int64_t>(c))) %
                             static_cast<std::int64_t>(c);
        rep.digits[i] = digit;
        r -= Int(digit) * g[i];
    }
    if (r % g[0] != 0) throw InternalError("unique_representation: remainder not divisible by g_0");
    rep.digits[0] = static_cast<std::int64_t>(r / g[0]);
    return rep;
}

Classification classify(const SmoothAnalysis& analysis, std::int64_t n) {
    auto rep = unique_representation(analysis, n);
    if (rep.digits[0] < 0) return Classification::NotInSemigroup;
    if (rep.digits[0] == 0) return Classification::InApery;
    return Classification::InSemigroup;
}

AperySet explicit_apery(const SmoothAnalysis& analysis) {
    if (!analysis.is_smooth) throw NotSmooth();
    if (!analysis.coprime()) throw NotCoprime();

    const auto& g = analysis.sequence;
    const std::uint64_t g0 = g[0];
    const std::size_t k = analysis.k();

    AperySet ap;
    ap.t = g0;
    ap.elements.assign(static_cast<std::size_t>(g0), ~0ull);

    // Mixed-radix sweep over digit tuples; there are prod c_i = g_0 of
    // them, one per residue class.
    std::vector<std::uint64_t> digit(k + 1, 0);
    std::uint64_t value = 0;
    while (true) {
        std::size_t slot = static_cast<std::size_t>(value % g0);
        if (ap.elements[slot] != ~0ull)
            throw InternalError("explicit_apery: residue collision");
        ap.elements[slot] = value;

        std::size_t i = 1;
        for (; i <= k; ++i) {
            if (digit[i] + 1 < analysis.c_values[i - 1]) {
                ++digit[i];
                value += g[i];
                break;
            }
            value -= digit[i] * g[i];
            digit[i] = 0;
        }
        if (i > k) break;
    }
    return ap;
}

} // namespace nsg
