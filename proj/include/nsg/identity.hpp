#pragma once

#include "nsg/polynomial.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/types.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace nsg {

/// The function family the Apery identity is evaluated over. Everything is
/// exact, so identity checks are equality checks.
class TestFunction {
public:
    struct Polynomial {
        std::vector<Rat> coeffs; // ascending, canonical (no trailing zeros)
    };
    struct Exponential {
        Rat base; // f(n) = base^n, base != 0
    };
    struct SignedMonomial {
        std::uint32_t m; // f(n) = (-1)^n n^m
    };

    static TestFunction polynomial(std::vector<Rat> coeffs);
    static TestFunction monomial(std::uint32_t m); // f(n) = n^m
    static TestFunction exponential(Rat base);
    static TestFunction signed_monomial(std::uint32_t m);

    Rat operator()(std::uint64_t n) const;
    std::string describe() const;

private:
    std::variant<Polynomial, Exponential, SignedMonomial> body_;
};

struct IdentityReport {
    Rat lhs;                 // sum over NR of f(n+t) - f(n)
    Rat rhs;                 // sum over Ap(S;t) of f minus sum over [0,t)
    Rat rhs_congruence_form; // sum over Ap(S;t) of f(n) - f(n mod t)
    bool holds = false;
};

struct HilbertSeries {
    IntPolynomial numerator;           // sum of x^n over Ap(S;t)
    std::uint64_t denominator_exponent; // denominator is 1 - x^t

    // Expands numerator/(1 - x^t) to degree `limit` inclusive.
    std::vector<Int> expand(std::uint64_t limit) const;
};

// Evaluates both sides of the Apery identity for f; holds must come back
// true for every valid input, a false value is an implementation bug.
IdentityReport identity_sides(const NumericalSemigroup& s, std::uint64_t t,
                              const TestFunction& f);

// Recovers the genus from the identity with f(n) = n.
std::uint64_t genus_from_identity(const NumericalSemigroup& s, std::uint64_t t);

HilbertSeries hilbert_series(const NumericalSemigroup& s, std::uint64_t t);

// sum of x^n over the gaps.
IntPolynomial gap_polynomial(const NumericalSemigroup& s);

// Indicator series of S up to degree `limit` inclusive (1/(1-x) minus the
// gap polynomial).
std::vector<Int> indicator_series(const NumericalSemigroup& s, std::uint64_t limit);

} // namespace nsg
