#include "nsg/identity.hpp"

#include <sstream>

namespace nsg {

TestFunction TestFunction::polynomial(std::vector<Rat> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    TestFunction f;
    f.body_ = Polynomial{std::move(coeffs)};
    return f;
}

TestFunction TestFunction::monomial(std::uint32_t m) {
    std::vector<Rat> c(m + 1, Rat(0));
    c[m] = 1;
    return polynomial(std::move(c));
}

TestFunction TestFunction::exponential(Rat base) {
    if (base == 0) throw Error("exponential base must be nonzero");
    TestFunction f;
    f.body_ = Exponential{std::move(base)};
    return f;
}

TestFunction TestFunction::signed_monomial(std::uint32_t m) {
    TestFunction f;
    f.body_ = SignedMonomial{m};
    return f;
}

namespace {
Rat rat_pow(const Rat& base, std::uint64_t e) {
    Rat r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Int int_pow(std::uint64_t n, std::uint32_t m) {
    Int r = 1, b = n;
    while (m) {
        if (m & 1) r *= b;
        b *= b;
        m >>= 1;
    }
    return r;
}
} // namespace

Rat TestFunction::operator()(std::uint64_t n) const {
    struct Eval {
        std::uint64_t n;
        Rat operator()(const Polynomial& p) const {
            Rat acc = 0;
            for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
                acc = acc * Rat(Int(n)) + *it; // Horner
            return acc;
        }
        Rat operator()(const Exponential& e) const { return rat_pow(e.base, n); }
        Rat operator()(const SignedMonomial& s) const {
            Rat v(int_pow(n, s.m));
            return (n % 2 == 0) ? v : -v;
        }
    };
    return std::visit(Eval{n}, body_);
}

std::string TestFunction::describe() const {
    struct Desc {
        std::string operator()(const Polynomial& p) const {
            std::ostringstream out;
            out << "poly[";
            for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
                if (i) out << ",";
                out << p.coeffs[i];
            }
            out << "]";
            return out.str();
        }
        std::string operator()(const Exponential& e) const {
            std::ostringstream out;
            out << e.base << "^n";
            return out.str();
        }
        std::string operator()(const SignedMonomial& s) const {
            return "(-1)^n n^" + std::to_string(s.m);
        }
    };
    return std::visit(Desc{}, body_);
}

IdentityReport identity_sides(const NumericalSemigroup& s, std::uint64_t t,
                              const TestFunction& f) {
    const AperySet& ap = s.apery_set(t); // validates t
    const GapSet& gs = s.gaps();

    IdentityReport rep;
    rep.lhs = 0;
    for (auto n : gs.gaps) rep.lhs += f(n + t) - f(n);

    Rat ap_sum = 0, range_sum = 0, cong_sum = 0;
    for (auto w : ap.elements) {
        ap_sum += f(w);
        cong_sum += f(w) - f(w % t);
    }
    for (std::uint64_t n = 0; n < t; ++n) range_sum += f(n);
    rep.rhs = ap_sum - range_sum;
    rep.rhs_congruence_form = cong_sum;
    rep.holds = rep.lhs == rep.rhs && rep.rhs == rep.rhs_congruence_form;
    return rep;
}

std::uint64_t genus_from_identity(const NumericalSemigroup& s, std::uint64_t t) {
    // With f(n) = n the left side collapses to t * #NR.
    IdentityReport rep = identity_sides(s, t, TestFunction::monomial(1));
    if (!rep.holds) throw InternalError("identity with f(n)=n failed to hold");
    Int g = require_integral(rep.rhs / Rat(Int(t)), "genus_from_identity");
    if (g < 0) throw NonIntegralResult("genus_from_identity (negative)");
    return static_cast<std::uint64_t>(g);
}

HilbertSeries hilbert_series(const NumericalSemigroup& s, std::uint64_t t) {
    const AperySet& ap = s.apery_set(t);
    HilbertSeries h;
    h.denominator_exponent = t;
    for (auto w : ap.elements) h.numerator.add_term(static_cast<std::size_t>(w), 1);
    return h;
}

std::vector<Int> HilbertSeries::expand(std::uint64_t limit) const {
    // s[n] = numerator[n] + s[n - t]
    std::vector<Int> out(static_cast<std::size_t>(limit) + 1, Int(0));
    const std::uint64_t t = denominator_exponent;
    for (std::uint64_t n = 0; n <= limit; ++n) {
        Int v = numerator.coeff(static_cast<std::size_t>(n));
        if (n >= t) v += out[static_cast<std::size_t>(n - t)];
        out[static_cast<std::size_t>(n)] = v;
    }
    return out;
}

IntPolynomial gap_polynomial(const NumericalSemigroup& s) {
    IntPolynomial p;
    for (auto n : s.gaps().gaps) p.add_term(static_cast<std::size_t>(n), 1);
    return p;
}

std::vector<Int> indicator_series(const NumericalSemigroup& s, std::uint64_t limit) {
    std::vector<Int> out(static_cast<std::size_t>(limit) + 1, Int(1));
    for (auto n : s.gaps().gaps) {
        if (n > limit) break;
        out[static_cast<std::size_t>(n)] = 0;
    }
    return out;
}

} // namespace nsg
