// Weight-graded basis enumeration and the redundancy-elimination hunt:
// minimal-support subsets of the basis are tested against the target zeta
// value, and a relation is kept only when its support admits no relation
// on its own.
#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "precision.hpp"
#include "pslq.hpp"
#include "sums.hpp"
#include "terms.hpp"
#include "zeta.hpp"

namespace zetaforge {

struct SearchConfig {
    int weight = 2;
    long digits = 0;        // 0: max(120, 40 * (basis_size + 1))
    double max_norm = 1e12;
    int max_support = 0;    // 0: whole basis
    std::string cache_dir;  // empty: no disk cache
};

struct SimpleFormCertificate {
    SumTerm term;
    NoRelationCertificate cert;
};

struct HuntReport {
    SearchConfig config;
    TermKind kind = TermKind::Mu;
    long digits = 0;
    std::vector<SumTerm> basis;
    std::vector<Relation> relations;     // terms = [zeta(w)] ++ support
    std::vector<Relation> redundancies;  // relations among sums alone
    std::vector<SimpleFormCertificate> certificates;  // single-term rejections
    std::vector<std::string> warnings;
    double elapsed_seconds = 0.0;
};

namespace detail {

// Partitions of n into even parts >= 2, as descending multisets, emitted in
// descending lexicographic order.
inline void even_partitions_rec(int n, int maxpart, std::vector<int>& cur,
                                std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(maxpart, n); p >= 2; p -= 2) {
        cur.push_back(p);
        even_partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> even_partitions(int n) {
    std::vector<std::vector<int>> out;
    if (n < 0 || n % 2 != 0)
        return out;
    std::vector<int> cur;
    even_partitions_rec(n, n, cur, out);
    return out;
}

}  // namespace detail

// All terms of the given kind with weight(term) = weight: descending m of the
// kind's parity, then descending-lexicographic even partitions of the rest.
inline std::vector<SumTerm> enumerate_basis(int weight, TermKind kind) {
    if (kind == TermKind::Zeta)
        throw std::invalid_argument("enumerate_basis: kind must be lambda or mu");
    std::vector<SumTerm> out;
    const int m_min = kind == TermKind::Lambda ? 3 : 2;
    int m_start = weight;
    if (kind == TermKind::Lambda && m_start % 2 == 0)
        --m_start;
    if (kind == TermKind::Mu && m_start % 2 != 0)
        --m_start;
    for (int m = m_start; m >= m_min; m -= 2)
        for (auto& parts : detail::even_partitions(weight - m))
            out.push_back(kind == TermKind::Lambda ? SumTerm::lambda(m, parts)
                                                   : SumTerm::mu(m, parts));
    return out;
}

// Thin wrapper over pslq for probing a support set on its own.
inline PslqResult check_redundancy(const std::vector<BigReal>& values,
                                   const PrecisionContext& ctx, double max_norm = 1e12) {
    if (values.size() < 2)
        throw std::invalid_argument("check_redundancy: need at least two values");
    return pslq(values, ctx, max_norm);
}

struct SimpleFormResult {
    PslqStatus status = PslqStatus::Indeterminate;
    std::optional<Relation> relation;
    std::optional<NoRelationCertificate> certificate;
    SumTerm term;
};

// The section-1 style probe: is zeta(w) a single rational multiple of the
// plain central-binomial sum of the same weight?
inline SimpleFormResult exclude_simple_form(int weight, const PrecisionContext& ctx,
                                            double max_norm = 1e12) {
    TermKind kind = weight % 2 != 0 ? TermKind::Lambda : TermKind::Mu;
    SumTerm term = kind == TermKind::Lambda ? SumTerm::lambda(weight, {})
                                            : SumTerm::mu(weight, {});
    EvaluatedBasis eb = eval_basis({term}, ctx);
    BigReal zv = zeta_int(weight, ctx);
    std::vector<BigReal> vals{zv, eb.values[0]};
    PslqResult r = pslq(vals, ctx, max_norm);

    SimpleFormResult out;
    out.status = r.status;
    out.term = term;
    if (r.status == PslqStatus::Found) {
        Relation rel;
        rel.terms = {SumTerm::zeta(weight), term};
        rel.coefficients = r.coefficients;
        rel.residual = abs(dot_product(r.coefficients, vals, ctx.prec_bits()));
        rel.digits_used = ctx.digits;
        out.relation = rel;
    } else if (r.status == PslqStatus::Excluded) {
        out.certificate = NoRelationCertificate{r.norm_bound, ctx.digits, r.iterations};
    }
    return out;
}

namespace detail {

inline bool next_combination(std::vector<size_t>& c, size_t n) {
    size_t k = c.size();
    for (size_t i = k; i-- > 0;) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (size_t j = i + 1; j < k; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

inline HuntReport hunt(const SearchConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    if (cfg.weight < 2)
        throw std::invalid_argument("hunt: weight must be >= 2");

    HuntReport rep;
    rep.config = cfg;
    rep.kind = cfg.weight % 2 != 0 ? TermKind::Lambda : TermKind::Mu;
    rep.basis = enumerate_basis(cfg.weight, rep.kind);

    const size_t bn = rep.basis.size();
    rep.digits = cfg.digits > 0 ? cfg.digits
                                : std::max(120L, 40L * static_cast<long>(bn + 1));
    const PrecisionContext ctx = ctx_new(rep.digits);
    if (bn == 0)
        return rep;

    std::optional<SumCache> cache;
    if (!cfg.cache_dir.empty())
        cache.emplace(cfg.cache_dir);
    const SumCache* cp = cache ? &*cache : nullptr;

    EvaluatedBasis eb = eval_basis(rep.basis, ctx, cp);
    BigReal zv = zeta_int(cfg.weight, ctx);

    // Elevated-precision values for re-verifying accepted relations, and
    // escalated values for retrying indeterminate runs; both lazy.
    struct Pass {
        PrecisionContext ctx;
        std::vector<BigReal> values;  // basis order
        BigReal zeta;
    };
    auto make_pass = [&](long digits) {
        PrecisionContext c = ctx_new(digits);
        EvaluatedBasis e = eval_basis(rep.basis, c, cp);
        return Pass{c, std::move(e.values), zeta_int(cfg.weight, c)};
    };
    std::optional<Pass> elevated, escalated;
    auto get_elevated = [&]() -> Pass& {
        if (!elevated)
            elevated = make_pass(rep.digits + (rep.digits + 3) / 4);
        return *elevated;
    };
    auto get_escalated = [&]() -> Pass& {
        if (!escalated)
            escalated = make_pass(rep.digits + (rep.digits + 1) / 2);
        return *escalated;
    };

    const BigReal accept_threshold = pow10(-rep.digits + 15, ctx.prec_bits());

    std::vector<std::vector<size_t>> accepted_supports;
    std::set<std::pair<std::vector<std::string>, std::vector<std::string>>> seen_redundancies;

    auto record_redundancy = [&](const std::vector<size_t>& subset,
                                 const std::vector<mpz_class>& coeffs, bool with_zeta) {
        // coeffs aligned with (optional zeta slot ++) subset; keep nonzero entries.
        Relation red;
        std::vector<BigReal> vals;
        size_t off = with_zeta ? 1 : 0;
        for (size_t i = 0; i < subset.size(); ++i) {
            if (coeffs[i + off] == 0)
                continue;
            red.terms.push_back(rep.basis[subset[i]]);
            red.coefficients.push_back(coeffs[i + off]);
            vals.push_back(eb.values[subset[i]]);
        }
        if (red.coefficients.size() < 2)
            return;
        red.coefficients = canonicalize(std::move(red.coefficients));
        red.residual = abs(dot_product(red.coefficients, vals, ctx.prec_bits()));
        red.digits_used = rep.digits;
        std::vector<std::string> ts, cs;
        for (const auto& t : red.terms)
            ts.push_back(t.str());
        for (const auto& c : red.coefficients)
            cs.push_back(c.get_str());
        if (seen_redundancies.emplace(ts, cs).second)
            rep.redundancies.push_back(std::move(red));
    };

    // pslq with one automatic escalation on indeterminate. values are picked
    // from the pass by subset indices; with_zeta prepends the zeta value.
    auto run_pslq = [&](const std::vector<size_t>& subset, bool with_zeta,
                        bool& used_escalation) -> PslqResult {
        auto gather = [&](const Pass* p) {
            std::vector<BigReal> vals;
            if (with_zeta)
                vals.push_back(p ? p->zeta : zv);
            for (size_t i : subset)
                vals.push_back(p ? p->values[i] : eb.values[i]);
            return vals;
        };
        PslqResult r = pslq(gather(nullptr), ctx, cfg.max_norm);
        if (r.status != PslqStatus::Indeterminate)
            return r;
        used_escalation = true;
        Pass& esc = get_escalated();
        return pslq(gather(&esc), esc.ctx, cfg.max_norm);
    };

    const size_t max_support = cfg.max_support > 0
                                   ? std::min<size_t>(cfg.max_support, bn)
                                   : bn;
    for (size_t size = 1; size <= max_support; ++size) {
        std::vector<size_t> subset(size);
        for (size_t i = 0; i < size; ++i)
            subset[i] = i;
        do {
            bool pruned = false;
            for (const auto& acc : accepted_supports) {
                if (std::includes(subset.begin(), subset.end(), acc.begin(), acc.end())) {
                    pruned = true;
                    break;
                }
            }
            if (pruned)
                continue;

            bool escalated_used = false;
            PslqResult r = run_pslq(subset, true, escalated_used);
            if (r.status == PslqStatus::Indeterminate) {
                std::string w = "indeterminate pslq for subset {";
                for (size_t i : subset)
                    w += rep.basis[i].str() + " ";
                w += "}; skipped";
                rep.warnings.push_back(w);
                continue;
            }
            if (r.status == PslqStatus::Excluded) {
                if (size == 1)
                    rep.certificates.push_back(SimpleFormCertificate{
                        rep.basis[subset[0]],
                        NoRelationCertificate{r.norm_bound, rep.digits, r.iterations}});
                continue;
            }

            // Found. Zeta coefficient zero: a redundancy among the sums.
            if (r.coefficients[0] == 0) {
                record_redundancy(subset, r.coefficients, true);
                continue;
            }
            // A zero support coefficient means the true support is smaller;
            // that subset was (or will be) handled on its own.
            bool zero_support = false;
            for (size_t i = 1; i < r.coefficients.size(); ++i)
                if (r.coefficients[i] == 0)
                    zero_support = true;
            if (zero_support)
                continue;

            // Toss out the zeta value: the support alone must admit nothing.
            if (size >= 2) {
                bool esc2 = false;
                PslqResult rb = run_pslq(subset, false, esc2);
                if (rb.status == PslqStatus::Found) {
                    record_redundancy(subset, rb.coefficients, false);
                    continue;
                }
                if (rb.status == PslqStatus::Indeterminate) {
                    rep.warnings.push_back("indeterminate support check; subset skipped");
                    continue;
                }
            }

            // Re-verify at elevated precision before promoting to a formula.
            Relation rel;
            rel.terms.push_back(SumTerm::zeta(cfg.weight));
            for (size_t i : subset)
                rel.terms.push_back(rep.basis[i]);
            rel.coefficients = r.coefficients;
            rel.digits_used = rep.digits;
            Pass& ev = get_elevated();
            std::vector<BigReal> evals{ev.zeta};
            for (size_t i : subset)
                evals.push_back(ev.values[i]);
            rel.residual = verify_relation(rel, evals, ev.ctx);
            if (!(rel.residual < accept_threshold)) {
                rep.warnings.push_back("relation failed elevated-precision verification");
                continue;
            }
            accepted_supports.push_back(subset);
            rep.relations.push_back(std::move(rel));
        } while (detail::next_combination(subset, bn));
    }

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace zetaforge
