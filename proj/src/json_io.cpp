#include "nsg/json_io.hpp"

#include <sstream>

namespace nsg {

using nlohmann::json;

namespace {

std::string dec(const Int& v) { return v.str(); }

std::string dec(const Rat& v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

json coeff_strings(const IntPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs) arr.push_back(dec(c));
    return arr;
}

} // namespace

json to_json(const NumericalSemigroup& s) {
    return json{{"generators", s.generators()}};
}

json to_json(const GapSet& g) {
    return json{{"gaps", g.gaps}, {"genus", g.genus()}, {"frobenius", g.frobenius}};
}

json to_json(const AperySet& a) {
    return json{{"t", a.t}, {"elements", a.elements}};
}

json to_json(const IdentityReport& r) {
    return json{{"lhs", dec(r.lhs)},
                {"rhs", dec(r.rhs)},
                {"rhs_congruence_form", dec(r.rhs_congruence_form)},
                {"holds", r.holds}};
}

json to_json(const IntPolynomial& p) {
    return json{{"coefficients", coeff_strings(p)}};
}

json to_json(const HilbertSeries& h) {
    return json{{"numerator", coeff_strings(h.numerator)},
                {"denominator_exponent", h.denominator_exponent}};
}

json to_json(const SmoothAnalysis& a) {
    return json{{"sequence", a.sequence},
                {"d", a.d_values},
                {"c", a.c_values},
                {"smooth", a.is_smooth},
                {"certificates", a.certificates}};
}

json to_json(const DigitRepresentation& d, std::int64_t n) {
    return json{{"n", n}, {"digits", d.digits}};
}

json to_json(const SylvesterReport& r) {
    json s = json::object(), t = json::object(), agree = json::object();
    for (const auto& [m, v] : r.s_closed) s[std::to_string(m)] = dec(v);
    for (const auto& [m, v] : r.s_oracle)
        if (!s.contains(std::to_string(m))) s[std::to_string(m)] = dec(v);
    for (const auto& [m, v] : r.t_closed) t[std::to_string(m)] = dec(v);
    for (const auto& [m, v] : r.t_oracle)
        if (!t.contains(std::to_string(m))) t[std::to_string(m)] = dec(v);
    for (const auto& [m, ok] : r.agreement) agree[std::to_string(m)] = ok;
    return json{{"sequence", r.sequence},
                {"c", r.c_values},
                {"S", s},
                {"T", t},
                {"genus", dec(r.genus)},
                {"frobenius", dec(r.frobenius)},
                {"symmetric", r.symmetric},
                {"J", r.j_first_odd},
                {"I_G", r.even_generator_indices},
                {"agreement", agree}};
}

} // namespace nsg
