#include "nsg/identity.hpp"
#include "nsg/json_io.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/smooth.hpp"
#include "nsg/sylvester.hpp"
#include "nsg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw nsg::Error("empty entry in list '" + text + "'");
        std::size_t pos = 0;
        unsigned long long v = std::stoull(item, &pos);
        if (pos != item.size()) throw nsg::Error("bad integer '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw nsg::Error("empty list");
    return out;
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep = ",") {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
    return out.str();
}

struct Output {
    bool as_json = false;
    void emit(const json& j, const std::string& text) const {
        if (as_json) std::cout << j.dump() << "\n";
        else std::cout << text << "\n";
    }
};

int dispatch(const CLI::App& app, const Output& out, const std::string& gens_arg,
             const std::string& seq_arg, std::uint64_t t, std::uint64_t j_index,
             std::int64_t n_value, const std::string& a_list, const std::string& b_list,
             std::uint64_t ww_a, std::uint64_t ww_b, std::uint32_t ww_m,
             const std::vector<std::uint32_t>& extra_m, std::uint64_t verify_count,
             std::uint64_t verify_seed, bool detect_set) {
    using namespace nsg;

    if (app.got_subcommand("gaps")) {
        auto s = NumericalSemigroup::make(parse_list(gens_arg));
        const GapSet& g = s.gaps();
        std::ostringstream text;
        text << "gaps: " << (g.gaps.empty() ? "(none)" : join(g.gaps)) << "; genus "
             << g.genus() << "; frobenius " << g.frobenius;
        out.emit(to_json(g), text.str());
    } else if (app.got_subcommand("apery")) {
        auto s = NumericalSemigroup::make(parse_list(gens_arg));
        const AperySet& ap = s.apery_set(t);
        out.emit(to_json(ap), "Ap(S;" + std::to_string(t) + ") = {" + join(ap.elements) + "}");
    } else if (app.got_subcommand("frobenius")) {
        auto s = NumericalSemigroup::make(parse_list(gens_arg));
        std::int64_t f = s.frobenius_via_apery(s.min_generator());
        out.emit(json{{"frobenius", f}}, "frobenius: " + std::to_string(f));
    } else if (app.got_subcommand("genus")) {
        auto s = NumericalSemigroup::make(parse_list(gens_arg));
        std::uint64_t g = s.genus_via_apery(s.min_generator());
        out.emit(json{{"genus", g}}, "genus: " + std::to_string(g));
    } else if (app.got_subcommand("hilbert")) {
        auto s = NumericalSemigroup::make(parse_list(gens_arg));
        HilbertSeries h = hilbert_series(s, t);
        out.emit(to_json(h), "H(x) = (" + h.numerator.to_string() + ") / (1 - x^" +
                                 std::to_string(h.denominator_exponent) + ")");
    } else if (app.got_subcommand("analyze")) {
        SmoothAnalysis an = analyze_sequence(parse_list(seq_arg));
        std::string verdict = an.is_smooth ? "smooth" : "not smooth";
        out.emit(to_json(an), verdict + " (c = " + join(an.c_values) + ")");
    } else if (app.got_subcommand("compound")) {
        SuitablePair pair{parse_list(a_list), parse_list(b_list)};
        auto seq = compound_from_pair(pair);
        out.emit(json{{"sequence", seq}}, "G(A,B) = (" + join(seq) + ")");
    } else if (app.got_subcommand("detect")) {
        auto seq = parse_list(seq_arg);
        if (detect_set) {
            auto found = detect_compound_set(seq);
            if (found)
                out.emit(json{{"compound", true},
                              {"order", found->first},
                              {"A", found->second.a},
                              {"B", found->second.b}},
                         "compound as (" + join(found->first) + "): A = (" +
                             join(found->second.a) + "), B = (" + join(found->second.b) + ")");
            else out.emit(json{{"compound", false}}, "not compound (any ordering)");
        } else {
            auto pair = detect_compound(seq);
            if (pair)
                out.emit(json{{"compound", true}, {"A", pair->a}, {"B", pair->b}},
                         "compound: A = (" + join(pair->a) + "), B = (" + join(pair->b) + ")");
            else out.emit(json{{"compound", false}}, "not compound");
        }
    } else if (app.got_subcommand("rho")) {
        RhoResult r = permute_rho(parse_list(seq_arg), j_index);
        out.emit(json{{"sequence", r.sequence}, {"c", r.c_values}},
                 "rho_" + std::to_string(j_index) + " = (" + join(r.sequence) +
                     "), c = (" + join(r.c_values) + ")");
    } else if (app.got_subcommand("represent")) {
        SmoothAnalysis an = analyze_sequence(parse_list(seq_arg));
        DigitRepresentation rep = unique_representation(an, n_value);
        std::ostringstream text;
        text << n_value << " = ";
        for (std::size_t i = 0; i < rep.digits.size(); ++i) {
            if (i) text << " + ";
            text << rep.digits[i] << "*" << rep.sequence[i];
        }
        switch (classify(an, n_value)) {
            case Classification::NotInSemigroup: text << "  [not in S]"; break;
            case Classification::InApery: text << "  [in Ap(S;g0)]"; break;
            case Classification::InSemigroup: text << "  [in S]"; break;
        }
        out.emit(to_json(rep, n_value), text.str());
    } else if (app.got_subcommand("sylvester") || app.got_subcommand("alternating")) {
        SylvesterReport rep = invariant_report(parse_list(seq_arg), extra_m);
        std::ostringstream text;
        text << "sequence (" << join(rep.sequence) << "), c = (" << join(rep.c_values)
             << ")\n"
             << "genus " << rep.genus << ", frobenius " << rep.frobenius << ", symmetric "
             << (rep.symmetric ? "yes" : "no") << "\n";
        for (const auto& [m, v] : rep.s_oracle)
            text << "S_" << m << " = " << v
                 << (rep.s_closed.count(m) ? "" : " (enumeration only)") << "\n";
        for (const auto& [m, v] : rep.t_oracle)
            text << "T_" << m << " = " << v
                 << (rep.t_closed.count(m) ? "" : " (enumeration only)") << "\n";
        std::string t_str = text.str();
        t_str.pop_back();
        out.emit(to_json(rep), t_str);
    } else if (app.got_subcommand("wangwang")) {
        Int v = wang_wang_T(ww_a, ww_b, ww_m);
        out.emit(json{{"a", ww_a}, {"b", ww_b}, {"m", ww_m}, {"T", v.str()}},
                 "T_" + std::to_string(ww_m) + "(<" + std::to_string(ww_a) + "," +
                     std::to_string(ww_b) + ">) = " + v.str());
    } else if (app.got_subcommand("verify")) {
        VerifyResult res = run_verify({verify_count, verify_seed});
        json j{{"checks", res.checks},
               {"failures", res.failures.size()},
               {"ok", res.ok()}};
        std::ostringstream text;
        text << res.checks << " checks, " << res.failures.size() << " failures";
        out.emit(j, text.str());
        for (const auto& f : res.failures) std::cerr << "FAIL: " << f << "\n";
        if (!res.ok()) return 2;
    } else if (app.got_subcommand("bench")) {
        auto seq = parse_list(seq_arg);
        SmoothAnalysis an = analyze_sequence(seq);
        using clock = std::chrono::steady_clock;

        auto t0 = clock::now();
        Int s2 = sylvester_closed(an, 2);
        Int t2 = alternating_closed(an, 2);
        auto t1 = clock::now();
        NumericalSemigroup s = an.semigroup();
        EnumeratedSums e = sums_by_enumeration(s, 2);
        auto t2c = clock::now();

        double closed_us = std::chrono::duration<double, std::micro>(t1 - t0).count();
        double enum_us = std::chrono::duration<double, std::micro>(t2c - t1).count();
        bool agree = s2 == e.s && t2 == e.t;
        json j{{"S2", s2.str()},           {"T2", t2.str()},
               {"closed_us", closed_us},   {"enumeration_us", enum_us},
               {"speedup", enum_us / closed_us}, {"agree", agree}};
        std::ostringstream text;
        text << "S2 = " << s2 << ", T2 = " << t2 << "\nclosed form: " << closed_us
             << " us, enumeration: " << enum_us << " us (x"
             << (enum_us / closed_us) << ")\nagreement: " << (agree ? "exact" : "MISMATCH");
        out.emit(j, text.str());
        if (!agree) return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for numerical semigroups, Apery identities and Sylvester sums"};
    app.require_subcommand(1);

    Output out;
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    std::uint64_t cap = 100000000;
    if (const char* env = std::getenv("NSG_ENUM_CAP")) cap = std::strtoull(env, nullptr, 10);
    app.add_option("--enum-cap", cap, "gap enumeration cap (env NSG_ENUM_CAP)");

    std::string gens_arg, seq_arg, a_list, b_list;
    std::uint64_t t = 0, j_index = 0, ww_a = 0, ww_b = 0;
    std::int64_t n_value = 0;
    std::uint32_t ww_m = 0;
    std::vector<std::uint32_t> extra_m;
    std::uint64_t verify_count = 100, verify_seed = 1;
    bool detect_set = false;

    auto* c_gaps = app.add_subcommand("gaps", "gap set, genus and Frobenius number");
    c_gaps->add_option("generators", gens_arg, "comma-separated generators")->required();
    auto* c_apery = app.add_subcommand("apery", "Apery set of t");
    c_apery->add_option("generators", gens_arg)->required();
    c_apery->add_option("--t", t, "modulus (must lie in S)")->required();
    auto* c_frob = app.add_subcommand("frobenius", "Frobenius number via the Apery set");
    c_frob->add_option("generators", gens_arg)->required();
    auto* c_genus = app.add_subcommand("genus", "genus via the Apery set");
    c_genus->add_option("generators", gens_arg)->required();
    auto* c_hilbert = app.add_subcommand("hilbert", "Hilbert series numerator over 1 - x^t");
    c_hilbert->add_option("generators", gens_arg)->required();
    c_hilbert->add_option("--t", t)->required();
    auto* c_analyze = app.add_subcommand("analyze", "d/c values and smoothness");
    c_analyze->add_option("sequence", seq_arg, "order-significant sequence")->required();
    auto* c_compound = app.add_subcommand("compound", "build G(A,B) from a suitable pair");
    c_compound->add_option("--a", a_list)->required();
    c_compound->add_option("--b", b_list)->required();
    auto* c_detect = app.add_subcommand("detect", "recover a suitable pair");
    c_detect->add_option("sequence", seq_arg)->required();
    c_detect->add_flag("--set", detect_set, "try all orderings (up to 8 elements)");
    auto* c_rho = app.add_subcommand("rho", "apply the rho_j permutation");
    c_rho->add_option("sequence", seq_arg)->required();
    c_rho->add_option("--j", j_index)->required();
    auto* c_repr = app.add_subcommand("represent", "unique digit representation of n");
    c_repr->add_option("sequence", seq_arg)->required();
    c_repr->add_option("--n", n_value)->required();
    auto* c_syl = app.add_subcommand("sylvester", "Sylvester sum report");
    c_syl->add_option("sequence", seq_arg)->required();
    c_syl->add_option("--m", extra_m, "extra m for enumeration-only sums");
    auto* c_alt = app.add_subcommand("alternating", "alternating Sylvester sum report");
    c_alt->add_option("sequence", seq_arg)->required();
    c_alt->add_option("--m", extra_m);
    auto* c_ww = app.add_subcommand("wangwang", "two-generator alternating sum recurrence");
    c_ww->add_option("--a", ww_a)->required();
    c_ww->add_option("--b", ww_b, "must be odd")->required();
    c_ww->add_option("--m", ww_m)->required();
    auto* c_verify = app.add_subcommand("verify", "randomized property suite");
    c_verify->add_option("--count", verify_count);
    c_verify->add_option("--seed", verify_seed);
    auto* c_bench = app.add_subcommand("bench", "closed form vs enumeration wall time");
    c_bench->add_option("sequence", seq_arg)->required();

    (void)c_gaps;

    // let --format / --enum-cap appear after the subcommand too
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        const_cast<CLI::App*>(sc)->fallthrough();

    CLI11_PARSE(app, argc, argv);
    nsg::set_enumeration_cap(cap);
    out.as_json = format == "json";

    try {
        return dispatch(app, out, gens_arg, seq_arg, t, j_index, n_value, a_list, b_list,
                        ww_a, ww_b, ww_m, extra_m, verify_count, verify_seed, detect_set);
    } catch (const nsg::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const nsg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
