#pragma once

#include "nsg/types.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nsg {

/// Dense integer polynomial, ascending coefficients, no trailing zeros.
struct IntPolynomial {
    std::vector<Int> coeffs;

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    Int coeff(std::size_t i) const {
        return i < coeffs.size() ? coeffs[i] : Int(0);
    }

    void add_term(std::size_t exp, const Int& c) {
        if (coeffs.size() <= exp) coeffs.resize(exp + 1, Int(0));
        coeffs[exp] += c;
        trim();
    }

    bool operator==(const IntPolynomial&) const = default;

    std::string to_string(const std::string& var = "x") const;
};

} // namespace nsg
