// Command-line front end: evaluate terms, run relation hunts, verify the
// generating-function and Ramanujan identities. JSON is the primary output;
// text mode is rendered from the same JSON document.
//
// Exit codes: 0 found/pass, 1 usage error, 2 internal error,
//             3 certificate-only / check failed, 4 indeterminate.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetaforge/precision.hpp"
#include "zetaforge/ramanujan.hpp"
#include "zetaforge/report.hpp"
#include "zetaforge/search.hpp"
#include "zetaforge/series.hpp"
#include "zetaforge/sums.hpp"
#include "zetaforge/terms.hpp"
#include "zetaforge/zeta.hpp"

namespace {

using nlohmann::json;

void render_text(const json& j, std::ostream& os, int indent = 0) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_structured()) {
                os << pad << it.key() << ":\n";
                render_text(it.value(), os, indent + 1);
            } else {
                os << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& el : j) {
            if (el.is_structured()) {
                os << pad << "-\n";
                render_text(el, os, indent + 1);
            } else {
                os << pad << "- " << el.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

void emit(const json& j, const std::string& format, const std::string& out_file) {
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!out_file.empty()) {
        f.open(out_file);
        os = &f;
    }
    if (format == "json")
        *os << j.dump(2) << "\n";
    else
        render_text(j, *os);
}

std::string default_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty())
        return flag_value;
    if (const char* env = std::getenv("ZETAFORGE_CACHE"))
        return env;
    return {};
}

int cmd_eval(const std::vector<std::string>& term_strings, long digits,
             const std::string& format, const std::string& cache_dir) {
    zetaforge::PrecisionContext ctx = zetaforge::ctx_new(digits);

    std::vector<zetaforge::SumTerm> terms;
    for (const auto& s : term_strings)
        terms.push_back(zetaforge::parse_term(s));

    std::vector<zetaforge::SumTerm> sum_terms;
    for (const auto& t : terms)
        if (t.kind != zetaforge::TermKind::Zeta)
            sum_terms.push_back(t);

    std::optional<zetaforge::SumCache> cache;
    std::string cd = default_cache_dir(cache_dir);
    if (!cd.empty())
        cache.emplace(cd);

    zetaforge::EvaluatedBasis eb;
    if (!sum_terms.empty())
        eb = zetaforge::eval_basis(sum_terms, ctx, cache ? &*cache : nullptr);

    json rows = json::array();
    size_t si = 0;
    for (const auto& t : terms) {
        zetaforge::BigReal v =
            t.kind == zetaforge::TermKind::Zeta
                ? zetaforge::zeta_int(t.m, ctx)
                : eb.values[si++];
        rows.push_back({{"term", t.str()},
                        {"value", zetaforge::to_string(v, static_cast<size_t>(digits))}});
    }
    emit(rows, format, "");
    return 0;
}

int cmd_hunt(int weight, long digits, double max_norm, int max_support,
             const std::string& out_file, const std::string& format,
             const std::string& cache_dir) {
    zetaforge::SearchConfig cfg;
    cfg.weight = weight;
    cfg.digits = digits;
    cfg.max_norm = max_norm;
    cfg.max_support = max_support;
    cfg.cache_dir = default_cache_dir(cache_dir);

    zetaforge::HuntReport rep = zetaforge::hunt(cfg);
    emit(zetaforge::hunt_report_to_json(rep), format, out_file);

    for (const auto& w : rep.warnings)
        if (w.find("indeterminate") != std::string::npos)
            return 4;
    return rep.relations.empty() ? 3 : 0;
}

int cmd_verify_identity(const std::string& identity, int orders, long digits,
                        const std::string& format) {
    zetaforge::PrecisionContext ctx = zetaforge::ctx_new(digits);
    auto id = identity == "bb" ? zetaforge::GenfunIdentity::BorweinBradley
                               : zetaforge::GenfunIdentity::Koecher;
    size_t N = static_cast<size_t>(orders);
    zetaforge::TruncatedSeries lhs =
        id == zetaforge::GenfunIdentity::BorweinBradley ? zetaforge::bb_lhs(N, ctx)
                                                        : zetaforge::koecher_lhs(N, ctx);
    zetaforge::TruncatedSeries rhs =
        id == zetaforge::GenfunIdentity::BorweinBradley ? zetaforge::bb_rhs(N, ctx)
                                                        : zetaforge::koecher_rhs(N, ctx);

    zetaforge::BigReal tol = zetaforge::pow10(-digits + 15, ctx.prec_bits());
    bool all_pass = true;
    json rows = json::array();
    for (size_t n = 0; n <= N; ++n) {
        zetaforge::BigReal diff = zetaforge::abs(lhs.coeffs[n] - rhs.coeffs[n]);
        bool pass = diff < tol;
        all_pass = all_pass && pass;
        rows.push_back({{"n", n},
                        {"lhs", zetaforge::to_string(lhs.coeffs[n], static_cast<size_t>(digits))},
                        {"rhs", zetaforge::to_string(rhs.coeffs[n], static_cast<size_t>(digits))},
                        {"abs_diff", zetaforge::to_string(diff, 8)},
                        {"pass", pass}});
    }
    emit(rows, format, "");
    return all_pass ? 0 : 3;
}

int cmd_verify_family(const std::string& family, int n_from, int n_to, long digits,
                      const std::string& format) {
    zetaforge::PrecisionContext ctx = zetaforge::ctx_new(digits);
    auto fam = family == "4n+3" ? zetaforge::RamanujanFamily::Zeta4n3
                                : zetaforge::RamanujanFamily::Zeta4n1;
    auto rows = zetaforge::verify_ramanujan(fam, n_from, n_to, ctx);
    json arr = zetaforge::ramanujan_results_to_json(rows);

    zetaforge::BigReal tol = zetaforge::pow10(-digits + 15, ctx.prec_bits());
    bool all_pass = true;
    for (size_t i = 0; i < rows.size(); ++i) {
        bool pass = rows[i].abs_diff < tol;
        arr[i]["pass"] = pass;
        all_pass = all_pass && pass;
    }
    emit(arr, format, "");
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zetaforge: Apery-like zeta formula evaluation, hunting and verification"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string cache_dir;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cache-dir", cache_dir, "sum cache directory (env ZETAFORGE_CACHE)");

    auto* eval = app.add_subcommand("eval", "evaluate terms to high precision");
    std::vector<std::string> eval_terms;
    long eval_digits = 50;
    eval->add_option("terms", eval_terms, "terms like lambda(3,[4]) or zeta(7)")->required();
    eval->add_option("--digits", eval_digits, "decimal digits");

    auto* hunt = app.add_subcommand("hunt", "hunt for non-redundant zeta relations");
    int hunt_weight = 0;
    long hunt_digits = 0;
    double hunt_max_norm = 1e12;
    int hunt_max_support = 0;
    std::string hunt_out;
    hunt->add_option("--weight", hunt_weight, "target weight")->required();
    hunt->add_option("--digits", hunt_digits, "precision (default: search policy)");
    hunt->add_option("--max-norm", hunt_max_norm, "relation norm cutoff");
    hunt->add_option("--max-support", hunt_max_support, "cap on subset size");
    hunt->add_option("--out", hunt_out, "write report JSON to file");

    auto* verify = app.add_subcommand("verify", "verify generating-function or Ramanujan identities");
    std::string v_identity, v_family, v_nrange = "0..2";
    int v_orders = 3;
    long v_digits = 120;
    verify->add_option("--identity", v_identity, "bb | koecher")
        ->check(CLI::IsMember({"bb", "koecher"}));
    verify->add_option("--family", v_family, "4n+3 | 4n+1")
        ->check(CLI::IsMember({"4n+3", "4n+1"}));
    verify->add_option("--orders", v_orders, "series orders to compare");
    verify->add_option("--n", v_nrange, "n range A..B for family mode");
    verify->add_option("--digits", v_digits, "precision");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (eval->parsed())
            return cmd_eval(eval_terms, eval_digits, format, cache_dir);
        if (hunt->parsed())
            return cmd_hunt(hunt_weight, hunt_digits, hunt_max_norm, hunt_max_support,
                            hunt_out, format, cache_dir);
        if (verify->parsed()) {
            if (!v_identity.empty())
                return cmd_verify_identity(v_identity, v_orders, v_digits, format);
            if (!v_family.empty()) {
                auto dots = v_nrange.find("..");
                if (dots == std::string::npos) {
                    std::cerr << "error: --n expects a range like 0..2\n";
                    return 1;
                }
                int a = std::stoi(v_nrange.substr(0, dots));
                int b = std::stoi(v_nrange.substr(dots + 2));
                return cmd_verify_family(v_family, a, b, v_digits, format);
            }
            std::cerr << "error: verify needs --identity or --family\n";
            return 1;
        }
    } catch (const zetaforge::TermParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const zetaforge::TermInvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
