#include "nsg/polynomial.hpp"

#include <sstream>

namespace nsg {

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Int& c = coeffs[i];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        Int mag = abs(c);
        if (mag != 1 || i == 0) out << mag.str();
        if (i >= 1) {
            out << var;
            if (i >= 2) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

} // namespace nsg
