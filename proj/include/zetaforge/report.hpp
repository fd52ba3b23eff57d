// JSON rendering of hunt reports and verification tables. All numbers are
// serialized as strings so downstream consumers never lose precision.
#pragma once

#include <string>

#include <json.hpp>

#include "ramanujan.hpp"
#include "search.hpp"

namespace zetaforge {

inline std::string kind_name(TermKind k) {
    switch (k) {
    case TermKind::Lambda: return "lambda";
    case TermKind::Mu: return "mu";
    default: return "zeta";
    }
}

inline nlohmann::json relation_to_json(const Relation& rel, bool with_zeta) {
    nlohmann::json j;
    size_t start = 0;
    if (with_zeta) {
        j["zeta_coeff"] = rel.coefficients[0].get_str();
        start = 1;
    }
    nlohmann::json terms = nlohmann::json::array();
    nlohmann::json coeffs = nlohmann::json::array();
    for (size_t i = start; i < rel.terms.size(); ++i) {
        terms.push_back(rel.terms[i].str());
        coeffs.push_back(rel.coefficients[i].get_str());
    }
    j["terms"] = terms;
    j["coeffs"] = coeffs;
    j["residual"] = to_string(rel.residual, 8);
    return j;
}

inline nlohmann::json hunt_report_to_json(const HuntReport& rep) {
    nlohmann::json j;
    j["weight"] = rep.config.weight;
    j["kind"] = kind_name(rep.kind);
    j["digits"] = rep.digits;
    j["max_norm"] = rep.config.max_norm;
    j["basis"] = nlohmann::json::array();
    for (const auto& t : rep.basis)
        j["basis"].push_back(t.str());
    j["relations"] = nlohmann::json::array();
    for (const auto& r : rep.relations)
        j["relations"].push_back(relation_to_json(r, true));
    j["redundancies"] = nlohmann::json::array();
    for (const auto& r : rep.redundancies)
        j["redundancies"].push_back(relation_to_json(r, false));
    j["certificates"] = nlohmann::json::array();
    for (const auto& c : rep.certificates)
        j["certificates"].push_back({{"term", c.term.str()},
                                     {"norm_bound", to_string(c.cert.norm_bound, 8)},
                                     {"digits", c.cert.digits_used},
                                     {"iterations", c.cert.iterations}});
    j["warnings"] = rep.warnings;
    j["meta"] = {{"elapsed_seconds", rep.elapsed_seconds}};
    return j;
}

inline nlohmann::json ramanujan_results_to_json(const std::vector<RamanujanResult>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
        arr.push_back({{"family", r.family == RamanujanFamily::Zeta4n3 ? "4n+3" : "4n+1"},
                       {"n", r.n},
                       {"rhs", to_string(r.rhs_value, static_cast<size_t>(r.digits))},
                       {"zeta", to_string(r.zeta_reference, static_cast<size_t>(r.digits))},
                       {"abs_diff", to_string(r.abs_diff, 8)},
                       {"digits", r.digits}});
    return arr;
}

}  // namespace zetaforge
