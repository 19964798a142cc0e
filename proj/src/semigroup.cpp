#include "nsg/semigroup.hpp"

#include <algorithm>
#include <queue>

namespace nsg {

namespace {
std::uint64_t cap_value = 100000000; // 1e8
}

std::uint64_t enumeration_cap() { return cap_value; }
void set_enumeration_cap(std::uint64_t cap) {
    if (cap == 0) cap = 1;
    cap_value = cap;
}

Int require_integral(const Rat& r, const char* where) {
    if (boost::multiprecision::denominator(r) != 1) throw NonIntegralResult(where);
    return boost::multiprecision::numerator(r);
}

bool GapSet::contains(std::uint64_t n) const {
    return std::binary_search(gaps.begin(), gaps.end(), n);
}

std::vector<std::uint64_t> AperySet::below_t() const {
    std::vector<std::uint64_t> out;
    for (auto e : elements)
        if (e < t) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t AperySet::max() const {
    return *std::max_element(elements.begin(), elements.end());
}

Int AperySet::sum() const {
    Int s = 0;
    for (auto e : elements) s += e;
    return s;
}

NumericalSemigroup::NumericalSemigroup(std::vector<std::uint64_t> gens)
    : gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {}

NumericalSemigroup NumericalSemigroup::make(std::vector<std::uint64_t> generators) {
    if (generators.empty()) throw EmptyGenerators();
    for (auto g : generators)
        if (g == 0) throw ZeroGenerator();
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    std::uint64_t g = gcd_of(generators);
    if (g != 1) throw NonCoprimeGenerators(g);
    return NumericalSemigroup(std::move(generators));
}

const GapSet& NumericalSemigroup::gaps() const {
    std::call_once(cache_->gaps_once, [this] {
        GapSet gs;
        if (!is_full()) {
            // DP over [0, ...); stop once min(generators) consecutive
            // representable integers have been seen, after which every
            // larger integer is representable.
            const std::uint64_t g0 = gens_.front();
            const std::uint64_t cap = enumeration_cap();
            std::vector<bool> in_s;
            in_s.reserve(1024);
            in_s.push_back(true); // 0
            std::uint64_t run = 0, n = 0;
            while (run < g0) {
                ++n;
                if (n > cap)
                    throw EnumerationCapExceeded(
                        "gap enumeration exceeded cap " + std::to_string(cap));
                bool member = false;
                for (auto g : gens_) {
                    if (g > n) break;
                    if (in_s[static_cast<std::size_t>(n - g)]) { member = true; break; }
                }
                in_s.push_back(member);
                if (member) ++run;
                else {
                    run = 0;
                    gs.gaps.push_back(n);
                }
            }
            if (!gs.gaps.empty()) gs.frobenius = static_cast<std::int64_t>(gs.gaps.back());
        }
        cache_->gaps = std::move(gs);
    });
    return *cache_->gaps;
}

bool NumericalSemigroup::contains(std::int64_t n) const {
    if (n < 0) return false;
    if (n == 0 || is_full()) return n >= 0;
    const GapSet& gs = gaps();
    if (n > gs.frobenius) return true;
    return !gs.contains(static_cast<std::uint64_t>(n));
}

const AperySet& NumericalSemigroup::apery_set(std::uint64_t t) const {
    if (t == 0) throw ZeroModulus();
    {
        std::lock_guard<std::mutex> lock(cache_->apery_mutex);
        auto it = cache_->apery.find(t);
        if (it != cache_->apery.end()) return it->second;
    }
    if (!contains(static_cast<std::int64_t>(t))) throw ModulusNotInSemigroup(t);

    // Dijkstra on residues mod t; an edge r -> (r+g) mod t of weight g per
    // generator. The distance to residue r is the minimal element of S
    // congruent to r.
    const std::uint64_t INF = ~0ull;
    std::vector<std::uint64_t> dist(t, INF);
    dist[0] = 0;
    using Node = std::pair<std::uint64_t, std::uint64_t>; // (dist, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
    pq.emplace(0, 0);
    while (!pq.empty()) {
        auto [d, r] = pq.top();
        pq.pop();
        if (d != dist[r]) continue;
        for (auto g : gens_) {
            std::uint64_t nr = (r + g % t) % t;
            std::uint64_t nd = d + g;
            if (nd < dist[nr]) {
                dist[nr] = nd;
                pq.emplace(nd, nr);
            }
        }
    }
    AperySet ap;
    ap.t = t;
    ap.elements = std::move(dist);

    std::lock_guard<std::mutex> lock(cache_->apery_mutex);
    return cache_->apery.emplace(t, std::move(ap)).first->second;
}

std::int64_t NumericalSemigroup::frobenius_via_apery(std::uint64_t t) const {
    if (is_full()) return -1;
    const AperySet& ap = apery_set(t);
    return static_cast<std::int64_t>(ap.max()) - static_cast<std::int64_t>(t);
}

std::uint64_t NumericalSemigroup::genus_via_apery(std::uint64_t t) const {
    const AperySet& ap = apery_set(t);
    Rat g = Rat(ap.sum(), Int(t)) - Rat(Int(t) - 1, 2);
    Int gi = require_integral(g, "genus_via_apery");
    if (gi < 0) throw NonIntegralResult("genus_via_apery (negative)");
    return static_cast<std::uint64_t>(gi);
}

bool NumericalSemigroup::is_symmetric() const {
    if (is_full()) return false;
    return frobenius() == 2 * static_cast<std::int64_t>(genus()) - 1;
}

} // namespace nsg
