// Shared-pass evaluation of lambda/mu central-binomial sums: one loop over k
// maintains the exact binomial C(2k,k), every needed power sum P_r, and all
// partial sums of the requested basis. Results can be cached on disk.
#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "precision.hpp"
#include "terms.hpp"

namespace zetaforge {

// Terms after index K contribute less than 10^-working_digits: the summand
// decays like 4^-k from the central binomial, and the power-sum products are
// bounded by powers of zeta(2).
inline long truncation_bound(const PrecisionContext& ctx) {
    mpfr_t t, l10, l4;
    mpfr_inits2(128, t, l10, l4, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(l10, 10, MPFR_RNDN);
    mpfr_log(l10, l10, MPFR_RNDN);
    mpfr_set_ui(l4, 4, MPFR_RNDN);
    mpfr_log(l4, l4, MPFR_RNDN);
    mpfr_mul_si(t, l10, ctx.working_digits(), MPFR_RNDN);
    mpfr_div(t, t, l4, MPFR_RNDN);
    mpfr_ceil(t, t);
    long k = mpfr_get_si(t, MPFR_RNDN) + 20;
    mpfr_clears(t, l10, l4, static_cast<mpfr_ptr>(nullptr));
    return k;
}

struct EvaluatedBasis {
    std::vector<SumTerm> terms;
    std::vector<BigReal> values;
    long truncation_k = 0;
    long digits = 0;
};

// One JSON document per evaluated term, keyed by (term, digits, K).
// Writes go through a temp file and rename so concurrent readers never see
// a partial document.
class SumCache {
  public:
    explicit SumCache(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<std::string> load(const std::string& term, long digits, long k) const {
        std::ifstream in(entry_path(term, digits, k));
        if (!in)
            return std::nullopt;
        nlohmann::json doc;
        try {
            in >> doc;
            if (doc.at("term") != term || doc.at("digits") != digits ||
                doc.at("truncation_k") != k)
                return std::nullopt;
            return doc.at("value").get<std::string>();
        } catch (const nlohmann::json::exception&) {
            return std::nullopt;
        }
    }

    void store(const std::string& term, long digits, long k, const std::string& value) const {
        nlohmann::json doc{{"term", term},
                           {"digits", digits},
                           {"truncation_k", k},
                           {"value", value}};
        auto target = entry_path(term, digits, k);
        auto tmp = target;
        tmp += ".tmp" + std::to_string(::getpid());
        {
            std::ofstream out(tmp);
            out << doc.dump() << "\n";
        }
        std::filesystem::rename(tmp, target);
    }

  private:
    std::filesystem::path dir_;

    std::filesystem::path entry_path(const std::string& term, long digits, long k) const {
        std::string name;
        for (char c : term) {
            if (std::isalnum(static_cast<unsigned char>(c)))
                name += c;
            else if (c == ',' || c == '(' || c == '[')
                name += '_';
        }
        name += "__d" + std::to_string(digits) + "_k" + std::to_string(k) + ".json";
        return dir_ / name;
    }
};

inline EvaluatedBasis eval_basis(const std::vector<SumTerm>& terms, const PrecisionContext& ctx,
                                 const SumCache* cache = nullptr) {
    if (terms.empty())
        throw std::invalid_argument("eval_basis: empty basis");
    for (const auto& t : terms)
        if (t.kind == TermKind::Zeta)
            throw std::invalid_argument(
                "eval_basis: zeta terms are evaluated by zeta_int, not as sums");

    const long K = truncation_bound(ctx);
    const mpfr_prec_t prec = ctx.prec_bits();
    const size_t n = terms.size();

    EvaluatedBasis out;
    out.terms = terms;
    out.values.assign(n, BigReal(prec));
    out.truncation_k = K;
    out.digits = ctx.digits;

    std::vector<size_t> pending;
    for (size_t i = 0; i < n; ++i) {
        if (cache) {
            if (auto hit = cache->load(terms[i].str(), ctx.digits, K)) {
                out.values[i] = from_string(*hit, prec);
                continue;
            }
        }
        pending.push_back(i);
    }
    if (pending.empty())
        return out;

    std::map<int, BigReal> power_sums;  // r -> P_r(k), updated after each k
    for (size_t i : pending)
        for (int r : terms[i].parts)
            power_sums.emplace(r, BigReal(prec));

    std::vector<BigReal> acc(pending.size(), BigReal(prec));
    mpz_class binom = 2;  // C(2k,k) at k = 1
    mpz_class denom, kpow;
    for (long k = 1; k <= K; ++k) {
        for (size_t pi = 0; pi < pending.size(); ++pi) {
            const SumTerm& t = terms[pending[pi]];
            BigReal num = BigReal::of_long(1, prec);
            for (int r : t.parts)
                num *= power_sums.at(r);
            mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k),
                          static_cast<unsigned long>(t.m));
            denom = binom * kpow;
            BigReal contrib = num / denom;
            if (t.kind == TermKind::Lambda && k % 2 == 0)
                acc[pi] -= contrib;
            else
                acc[pi] += contrib;
        }
        for (auto& [r, p] : power_sums) {
            mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k),
                          static_cast<unsigned long>(r));
            BigReal inc(prec);
            mpfr_set_z(inc.get(), kpow.get_mpz_t(), MPFR_RNDN);
            mpfr_ui_div(inc.get(), 1, inc.get(), MPFR_RNDN);
            p += inc;
        }
        // C(2(k+1), k+1) = C(2k,k) * 2(2k+1)/(k+1)
        binom *= 2 * (2 * k + 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }

    for (size_t pi = 0; pi < pending.size(); ++pi) {
        out.values[pending[pi]] = acc[pi];
        if (cache)
            cache->store(terms[pending[pi]].str(), ctx.digits, K, to_string(acc[pi]));
    }
    return out;
}

}  // namespace zetaforge
