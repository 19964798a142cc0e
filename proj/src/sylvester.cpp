#include "nsg/sylvester.hpp"

#include <numeric>

namespace nsg {

namespace {

Int ipow(const Int& base, std::uint32_t e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Int binom(std::uint32_t n, std::uint32_t k) {
    Int r = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

void require_smooth_coprime(const SmoothAnalysis& an) {
    if (!an.is_smooth) throw NotSmooth();
    if (!an.coprime()) throw NotCoprime();
}

// sum (c_i^e - 1) g_i^e over i = 1..k
Int power_relation_sum(const SmoothAnalysis& an, std::uint32_t e) {
    Int r = 0;
    for (std::size_t i = 1; i <= an.k(); ++i)
        r += (ipow(Int(an.c_values[i - 1]), e) - 1) * ipow(Int(an.sequence[i]), e);
    return r;
}

// Closed-form genus of a smooth gcd-1 sequence with the given c values.
Int smooth_genus(const Int& g0, const Int& relation_sum) {
    return require_integral(Rat(1 - g0 + relation_sum, 2), "smooth genus formula");
}

// Frobenius bound under which the genus of <G^e> is cross-checked by
// full gap enumeration.
constexpr std::uint64_t kPowerEnumThreshold = 1u << 21;

} // namespace

PowerSequence power_sequence(const std::vector<std::uint64_t>& seq, std::uint32_t e) {
    if (e == 0) throw Error("exponent must be >= 1");
    PowerSequence p;
    p.base = seq;
    p.exponent = e;
    for (auto g : seq) p.result.push_back(ipow(Int(g), e));
    return p;
}

SigmaTau sigma_tau(std::uint32_t m, std::uint64_t g) {
    SigmaTau st{0, 0};
    for (std::uint64_t n = 0; n <= g; ++n) {
        Int p = ipow(Int(n), m);
        st.sigma += p;
        if (n % 2 == 0) st.tau += p;
        else st.tau -= p;
    }
    return st;
}

Int genus_of_power(const SmoothAnalysis& an, std::uint32_t e) {
    require_smooth_coprime(an);
    const Int g0e = ipow(Int(an.sequence[0]), e);
    const Int rel = power_relation_sum(an, e);
    const Int frobenius_bound = rel - g0e; // F(<G^e>) if G^e is smooth

    if (frobenius_bound < Int(kPowerEnumThreshold)) {
        std::vector<std::uint64_t> pow_gens;
        for (auto g : an.sequence)
            pow_gens.push_back(static_cast<std::uint64_t>(ipow(Int(g), e)));
        Int genus = Int(NumericalSemigroup::make(std::move(pow_gens)).genus());
        if (2 * genus + g0e - 1 != rel)
            throw InternalError("power-genus relation violated for e=" + std::to_string(e));
        return genus;
    }

    // Too large to enumerate: certify G^e smooth by raising single-term
    // witnesses (c_i g_i = q g_j implies c_i^e g_i^e = q^e g_j^e), then
    // use the closed genus formula.
    for (std::size_t i = 1; i <= an.k(); ++i) {
        bool certified = false;
        Int target = Int(an.c_values[i - 1]) * an.sequence[i];
        for (std::size_t j = 0; j < i && !certified; ++j)
            if (target % an.sequence[j] == 0) certified = true;
        if (!certified)
            throw EnumerationCapExceeded(
                "cannot certify G^" + std::to_string(e) +
                " smooth and its gap set is too large to enumerate");
    }
    return smooth_genus(g0e, rel);
}

Int sylvester_closed(const SmoothAnalysis& an, std::uint32_t m) {
    require_smooth_coprime(an);
    if (m > 2) throw Error("closed-form Sylvester sums are available for m <= 2 only");

    const Int s0 = smooth_genus(Int(an.sequence[0]), power_relation_sum(an, 1));
    if (m == 0) return s0;

    const Int s0_sq = genus_of_power(an, 2); // S_0(G^2)
    if (m == 1)
        return require_integral(Rat(s0 * s0 - s0, 2) + Rat(s0_sq, 12), "S_1 formula");
    return require_integral(Rat(2 * s0 - 1, 6) * (Rat(s0 * s0 - s0) + Rat(s0_sq, 2)),
                            "S_2 formula");
}

std::size_t first_odd_index(const std::vector<std::uint64_t>& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] % 2 == 1) return i;
    throw NotCoprime(); // all even contradicts gcd 1
}

std::vector<std::size_t> even_indices(const std::vector<std::uint64_t>& seq) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] % 2 == 0) out.push_back(i);
    return out;
}

Int alternating_closed(const SmoothAnalysis& an, std::uint32_t m) {
    require_smooth_coprime(an);
    if (m > 2) throw Error("closed-form alternating sums are available for m <= 2 only");

    const auto& g = an.sequence;
    // c_0 := 1, c_i for i >= 1 from the analysis
    auto c_at = [&](std::size_t i) { return i == 0 ? std::uint64_t(1) : an.c_values[i - 1]; };
    const std::size_t J = first_odd_index(g);
    const auto evens = even_indices(g);

    Int even_c_product = 1;
    for (auto i : evens) even_c_product *= c_at(i);
    const Int cj_gj = Int(c_at(J)) * g[J];

    const Int t0 = require_integral(
        Rat(1 - Rat(cj_gj, Int(g[0])) * even_c_product) / 2, "T_0 formula");
    if (m == 0) return t0;

    const Int s0 = smooth_genus(Int(g[0]), power_relation_sum(an, 1));
    if (m == 1)
        return require_integral(Rat((2 * s0 - 1) * (2 * t0 - 1) - 1, 4), "T_1 formula");

    const Int s0_sq = genus_of_power(an, 2);
    Int even_sum = 0;
    for (auto i : evens)
        even_sum += Int(g[i]) * g[i] * (Int(c_at(i)) * c_at(i) - 1);
    Int inner = 6 * s0 * s0 - 6 * s0 + 3 * s0_sq + Int(g[0]) * g[0] - cj_gj * cj_gj - even_sum;
    return require_integral(Rat(2 * t0 - 1, 12) * Rat(inner), "T_2 formula");
}

Int wang_wang_T(std::uint64_t a, std::uint64_t b, std::uint32_t m) {
    if (std::gcd(a, b) != 1) throw NotCoprime();
    if (b % 2 == 0) throw EvenSecondArgument();
    const bool a_even = a % 2 == 0;

    std::vector<Int> t(m + 1);
    t[0] = a_even ? require_integral(Rat(-(Int(b) - 1), 2), "wang_wang T_0") : Int(0);
    for (std::uint32_t mm = 1; mm <= m; ++mm) {
        SigmaTau st = sigma_tau(mm, b - 1);
        Int head = a_even ? st.tau - ipow(Int(a), mm) * st.sigma
                          : st.tau - ipow(Int(a), mm) * st.tau;
        Int tail = 0;
        for (std::uint32_t i = 0; i < mm; ++i)
            tail += binom(mm, i) * ipow(Int(b), mm - i) * t[i];
        t[mm] = require_integral(Rat(head - tail, 2), "wang_wang recurrence");
    }
    return t[m];
}

EnumeratedSums sums_by_enumeration(const NumericalSemigroup& s, std::uint32_t m) {
    EnumeratedSums out{0, 0};
    for (auto n : s.gaps().gaps) {
        Int p = ipow(Int(n), m);
        out.s += p;
        if (n % 2 == 0) out.t += p;
        else out.t -= p;
    }
    return out;
}

SylvesterReport invariant_report(const std::vector<std::uint64_t>& seq,
                                 const std::vector<std::uint32_t>& extra_m) {
    SmoothAnalysis an = analyze_sequence(seq);
    require_smooth_coprime(an);

    SylvesterReport rep;
    rep.sequence = an.sequence;
    rep.c_values = an.c_values;
    rep.j_first_odd = first_odd_index(seq);
    rep.even_generator_indices = even_indices(seq);

    NumericalSemigroup s = an.semigroup();
    rep.genus = Int(s.genus());
    rep.frobenius = Int(s.frobenius());
    rep.symmetric = s.is_symmetric();
    if (!rep.symmetric && !s.is_full())
        throw InternalError("smooth sequence produced a non-symmetric semigroup");

    std::vector<std::uint32_t> ms = {0, 1, 2};
    for (auto m : extra_m)
        if (m > 2) ms.push_back(m);

    for (auto m : ms) {
        EnumeratedSums oracle = sums_by_enumeration(s, m);
        rep.s_oracle[m] = oracle.s;
        rep.t_oracle[m] = oracle.t;
        if (m <= 2) {
            rep.s_closed[m] = sylvester_closed(an, m);
            rep.t_closed[m] = alternating_closed(an, m);
            bool ok = rep.s_closed[m] == oracle.s && rep.t_closed[m] == oracle.t;
            rep.agreement[m] = ok;
            if (!ok) {
                rep.all_agree = false;
                throw InternalError("closed form disagrees with enumeration at m=" +
                                    std::to_string(m));
            }
        }
    }
    return rep;
}

} // namespace nsg
