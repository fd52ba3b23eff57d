// Truncated power-series algebra and the generating-function checks: the
// zeta(4n+3) identity (in t = z^4) and Koecher's zeta(2n+3) identity
// (in t = z^2), verified coefficient-by-coefficient and at sample points.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "precision.hpp"
#include "sums.hpp"
#include "zeta.hpp"

namespace zetaforge {

struct TruncatedSeries {
    std::vector<BigReal> coeffs;  // index n holds the coefficient of t^n

    TruncatedSeries() = default;
    TruncatedSeries(size_t order, mpfr_prec_t prec) : coeffs(order + 1, BigReal(prec)) {}

    size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    static TruncatedSeries one(size_t order, mpfr_prec_t prec) {
        TruncatedSeries s(order, prec);
        s.coeffs[0] = BigReal::of_long(1, prec);
        return s;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        if (o.coeffs.size() != coeffs.size())
            throw std::invalid_argument("TruncatedSeries: order mismatch");
        for (size_t i = 0; i < coeffs.size(); ++i)
            coeffs[i] += o.coeffs[i];
        return *this;
    }

    TruncatedSeries scaled(const BigReal& f) const {
        TruncatedSeries s = *this;
        for (auto& c : s.coeffs)
            c *= f;
        return s;
    }
};

// Cauchy product truncated at the common order.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.coeffs.size() != b.coeffs.size())
        throw std::invalid_argument("series_mul: order mismatch");
    size_t N = a.order();
    mpfr_prec_t prec = a.coeffs.empty() ? 64 : a.coeffs[0].prec();
    TruncatedSeries r(N, prec);
    for (size_t i = 0; i <= N; ++i) {
        if (a.coeffs[i].is_zero())
            continue;
        for (size_t j = 0; i + j <= N; ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return r;
}

// Left side of the zeta(4n+3) generating function: coefficient of t^n is
// zeta(4n+3), from the geometric expansion of 1/(k^3 (1 - t/k^4)).
inline TruncatedSeries bb_lhs(size_t N, const PrecisionContext& ctx) {
    TruncatedSeries s(N, ctx.prec_bits());
    for (size_t n = 0; n <= N; ++n)
        s.coeffs[n] = zeta_int(static_cast<int>(4 * n + 3), ctx);
    return s;
}

inline TruncatedSeries koecher_lhs(size_t N, const PrecisionContext& ctx) {
    TruncatedSeries s(N, ctx.prec_bits());
    for (size_t n = 0; n <= N; ++n)
        s.coeffs[n] = zeta_int(static_cast<int>(2 * n + 3), ctx);
    return s;
}

// Right side of the zeta(4n+3) identity in t = z^4:
//   (5/2) sum_k (-1)^(k+1)/(k^3 C(2k,k)) * 1/(1-t/k^4)
//                * prod_{j<k} (1+4t/j^4)/(1-t/j^4),
// with the product carried incrementally, one series multiply per k.
inline TruncatedSeries bb_rhs(size_t N, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits();
    const long K = truncation_bound(ctx);

    TruncatedSeries acc(N, prec);
    TruncatedSeries prod = TruncatedSeries::one(N, prec);
    mpz_class binom = 2;  // C(2k,k) at k = 1
    mpz_class kpow;
    for (long k = 1; k <= K; ++k) {
        // geometric factor 1/(1 - t/k^4)
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k), 4);
        BigReal inv_k4 = BigReal::of_long(1, prec) / kpow;
        TruncatedSeries geom(N, prec);
        BigReal p = BigReal::of_long(1, prec);
        for (size_t n = 0; n <= N; ++n) {
            geom.coeffs[n] = p;
            p *= inv_k4;
        }

        mpz_class denom = binom * mpz_class(k) * mpz_class(k) * mpz_class(k);
        BigReal pref = (BigReal::of_long(5, prec) / 2) / denom;
        if (k % 2 == 0)
            pref = -pref;
        acc += series_mul(geom, prod).scaled(pref);

        // append factor (1+4t/k^4)/(1-t/k^4) = 1 + 5 sum_{n>=1} t^n/k^4n
        TruncatedSeries factor = TruncatedSeries::one(N, prec);
        BigReal q = inv_k4 * 5;
        for (size_t n = 1; n <= N; ++n) {
            factor.coeffs[n] = q;
            q *= inv_k4;
        }
        prod = series_mul(prod, factor);

        binom *= 2 * (2 * k + 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return acc;
}

// Right side of Koecher's zeta(2n+3) identity in t = z^2:
//   sum_k (-1)^(k+1)/(k^3 C(2k,k)) * (1/2 + 2/(1-t/k^2)) * prod_{j<k}(1-t/j^2).
inline TruncatedSeries koecher_rhs(size_t N, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits();
    const long K = truncation_bound(ctx);

    TruncatedSeries acc(N, prec);
    TruncatedSeries prod = TruncatedSeries::one(N, prec);
    mpz_class binom = 2;
    for (long k = 1; k <= K; ++k) {
        BigReal inv_k2 = BigReal::of_long(1, prec) / (k * k);

        TruncatedSeries bracket(N, prec);
        bracket.coeffs[0] = BigReal::of_long(5, prec) / 2;
        BigReal p = inv_k2 * 2;
        for (size_t n = 1; n <= N; ++n) {
            bracket.coeffs[n] = p;
            p *= inv_k2;
        }

        mpz_class denom = binom * mpz_class(k) * mpz_class(k) * mpz_class(k);
        BigReal pref = BigReal::of_long(1, prec) / denom;
        if (k % 2 == 0)
            pref = -pref;
        acc += series_mul(bracket, prod).scaled(pref);

        // append (1 - t/k^2)
        TruncatedSeries next = prod;
        for (size_t n = N; n >= 1; --n)
            next.coeffs[n] -= prod.coeffs[n - 1] * inv_k2;
        prod = std::move(next);

        binom *= 2 * (2 * k + 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return acc;
}

enum class GenfunIdentity { BorweinBradley, Koecher };

namespace detail {

// LHS at a point: sum_n zeta(e*n+3) z^(e*n), geometric in z^e.
inline BigReal genfun_lhs_at_point(GenfunIdentity id, const mpq_class& z,
                                   const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits();
    const int e = id == GenfunIdentity::BorweinBradley ? 4 : 2;
    mpq_class ze;
    mpz_pow_ui(mpq_numref(ze.get_mpq_t()), mpq_numref(z.get_mpq_t()),
               static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(ze.get_mpq_t()), mpq_denref(z.get_mpq_t()),
               static_cast<unsigned long>(e));
    ze.canonicalize();
    BigReal zstep = BigReal::of_mpq(ze, prec);
    BigReal zp = BigReal::of_long(1, prec);
    BigReal tail_scale = BigReal::of_long(2, prec) / (BigReal::of_long(1, prec) - abs(zstep));
    BigReal thr = pow10(-ctx.working_digits() - 2, prec);

    BigReal acc(prec);
    for (int n = 0;; ++n) {
        acc += zeta_int(e * n + 3, ctx) * zp;
        zp *= zstep;
        if (abs(zp) * tail_scale < thr)
            break;
    }
    return acc;
}

}  // namespace detail

// Direct truncated LHS sum_{k<=M} 1/(k^3 (1 - z^e/k^e)); used to exercise the
// O(M^-2) tail bound of the raw series.
inline BigReal genfun_lhs_direct(GenfunIdentity id, const mpq_class& z, long M,
                                 const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits();
    const unsigned long e = id == GenfunIdentity::BorweinBradley ? 4 : 2;
    mpq_class zpow = z;
    for (unsigned long i = 1; i < e; ++i)
        zpow *= z;  // z^e
    BigReal acc(prec);
    mpz_class ke;
    for (long k = 1; k <= M; ++k) {
        mpz_ui_pow_ui(ke.get_mpz_t(), static_cast<unsigned long>(k), e);
        // 1/(k^3 (1 - z^e/k^e))
        mpq_class t = mpq_class(1) - zpow / mpq_class(ke);
        mpq_class full = mpq_class(1) / (mpq_class(k) * mpq_class(k) * mpq_class(k) * t);
        acc += BigReal::of_mpq(full, prec);
    }
    return acc;
}

// Numerically evaluate both sides at rational |z| < 1 and return |LHS - RHS|.
// The RHS product factors stay exact rationals until the final conversion.
inline BigReal verify_at_point(GenfunIdentity id, const mpq_class& z,
                               const PrecisionContext& ctx) {
    mpq_class az = ::abs(z);
    if (az >= 1)
        throw std::domain_error("verify_at_point: |z| must be < 1");
    const mpfr_prec_t prec = ctx.prec_bits();
    const long K = truncation_bound(ctx);

    BigReal lhs = detail::genfun_lhs_at_point(id, z, ctx);

    const unsigned long e = id == GenfunIdentity::BorweinBradley ? 4 : 2;
    mpq_class zpow = z;
    for (unsigned long i = 1; i < e; ++i)
        zpow *= z;  // z^e

    BigReal rhs(prec);
    mpq_class prod = 1;  // prod_{j<k} of the identity's factor, exact
    mpz_class binom = 2;
    for (long k = 1; k <= K; ++k) {
        mpz_class ke;
        mpz_ui_pow_ui(ke.get_mpz_t(), static_cast<unsigned long>(k), e);
        mpq_class bracket;
        if (id == GenfunIdentity::BorweinBradley) {
            bracket = mpq_class(ke) / (mpq_class(ke) - zpow);  // 1/(1 - z^4/k^4)
            bracket *= mpq_class(5, 2);
        } else {
            bracket = mpq_class(1, 2) + 2 * mpq_class(ke) / (mpq_class(ke) - zpow);
        }
        mpz_class denom = binom * mpz_class(k) * mpz_class(k) * mpz_class(k);
        BigReal term = BigReal::of_mpq(bracket * prod, prec) / denom;
        if (k % 2 == 0)
            term = -term;
        rhs += term;

        if (id == GenfunIdentity::BorweinBradley)
            prod *= (mpq_class(ke) + 4 * zpow) / (mpq_class(ke) - zpow);
        else
            prod *= (mpq_class(ke) - zpow) / mpq_class(ke);

        binom *= 2 * (2 * k + 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return abs(lhs - rhs);
}

}  // namespace zetaforge
