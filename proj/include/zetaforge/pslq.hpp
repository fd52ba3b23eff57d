// PSLQ integer relation detection with gamma = 2/sqrt(3). Either finds a
// small integer vector orthogonal to the input, or certifies that every
// relation has Euclidean norm above a bound, or gives up (indeterminate)
// when the iteration cap is reached.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "precision.hpp"
#include "terms.hpp"

namespace zetaforge {

struct Relation {
    std::vector<SumTerm> terms;
    std::vector<mpz_class> coefficients;
    BigReal residual;
    long digits_used = 0;
};

struct NoRelationCertificate {
    BigReal norm_bound;
    long digits_used = 0;
    long iterations = 0;
};

enum class PslqStatus { Found, Excluded, Indeterminate };

struct PslqResult {
    PslqStatus status = PslqStatus::Indeterminate;
    std::vector<mpz_class> coefficients;  // canonical, when status == Found
    BigReal norm_bound;                   // best lower bound reached
    long iterations = 0;
    long digits_used = 0;
};

// Divide by the gcd and make the first nonzero entry positive.
inline std::vector<mpz_class> canonicalize(std::vector<mpz_class> c) {
    mpz_class g = 0;
    for (const auto& v : c)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 0)
        throw std::invalid_argument("canonicalize: all-zero coefficient vector");
    for (auto& v : c)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    for (const auto& v : c) {
        if (v == 0)
            continue;
        if (v < 0)
            for (auto& w : c)
                w = -w;
        break;
    }
    return c;
}

inline BigReal dot_product(const std::vector<mpz_class>& coeffs,
                           const std::vector<BigReal>& values, mpfr_prec_t prec) {
    if (coeffs.size() != values.size())
        throw std::invalid_argument("dot_product: length mismatch");
    BigReal acc(prec);
    for (size_t i = 0; i < coeffs.size(); ++i)
        acc += values[i] * coeffs[i];
    return acc;
}

// |sum coeff_i * value_i|. The caller supplies values computed at elevated
// precision (>= 1.25x the detection digits) and compares against its own
// threshold.
inline BigReal verify_relation(const Relation& rel, const std::vector<BigReal>& values,
                               const PrecisionContext& ctx) {
    if (rel.coefficients.size() != values.size())
        throw std::invalid_argument("verify_relation: length mismatch");
    return abs(dot_product(rel.coefficients, values, ctx.prec_bits()));
}

inline PslqResult pslq(const std::vector<BigReal>& values, const PrecisionContext& ctx,
                       double max_norm = 1e12) {
    const size_t n = values.size();
    if (n < 2)
        throw std::invalid_argument("pslq: need at least two values");
    for (const auto& v : values)
        if (v.is_zero())
            throw std::invalid_argument("pslq: zero input value");

    const mpfr_prec_t prec = ctx.prec_bits();
    const long W = ctx.working_digits();
    const BigReal eps = pow10(-W + 15, prec);
    const BigReal max_norm_r = [&] {
        BigReal r(prec);
        mpfr_set_d(r.get(), max_norm, MPFR_RNDN);
        return r;
    }();
    const long iter_cap = 2000 * static_cast<long>(n) * static_cast<long>(n) *
                          static_cast<long>(n);

    // gamma = 2/sqrt(3)
    BigReal gamma = BigReal::of_long(4, prec) / 3;
    mpfr_sqrt(gamma.get(), gamma.get(), MPFR_RNDN);

    // Normalized y so the detection threshold is scale invariant.
    BigReal norm(prec);
    for (const auto& v : values)
        norm += v * v;
    norm = sqrt(norm);
    std::vector<BigReal> y;
    y.reserve(n);
    for (const auto& v : values)
        y.push_back(v / norm);

    // Partial norms s_j = sqrt(sum_{i>=j} y_i^2) and the initial H matrix.
    std::vector<BigReal> s(n, BigReal(prec));
    {
        BigReal acc(prec);
        for (size_t i = n; i-- > 0;) {
            acc += y[i] * y[i];
            s[i] = sqrt(acc);
        }
    }
    std::vector<std::vector<BigReal>> H(n, std::vector<BigReal>(n - 1, BigReal(prec)));
    for (size_t j = 0; j + 1 < n; ++j) {
        H[j][j] = s[j + 1] / s[j];
        for (size_t i = j + 1; i < n; ++i)
            H[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
    }

    std::vector<std::vector<mpz_class>> B(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i)
        B[i][i] = 1;

    // Hermite-reduce rows first_row..n-1 against columns <= col_cap.
    auto reduce = [&](size_t first_row, size_t col_cap) {
        for (size_t i = std::max<size_t>(first_row, 1); i < n; ++i) {
            size_t jstart = std::min(i - 1, col_cap);
            for (size_t j = jstart + 1; j-- > 0;) {
                BigReal q = H[i][j] / H[j][j];
                mpz_class t = round_to_mpz(q);
                if (t == 0)
                    continue;
                y[j] += y[i] * t;
                for (size_t k = 0; k <= j; ++k)
                    H[i][k] -= H[j][k] * t;
                for (size_t l = 0; l < n; ++l)
                    B[l][j] += B[l][i] * t;
            }
        }
    };
    reduce(1, n - 2);

    PslqResult res;
    res.digits_used = ctx.digits;
    res.norm_bound = BigReal(prec);

    auto finish_found = [&](size_t j) {
        std::vector<mpz_class> rel(n);
        for (size_t l = 0; l < n; ++l)
            rel[l] = B[l][j];
        res.status = PslqStatus::Found;
        res.coefficients = canonicalize(std::move(rel));
    };

    for (long iter = 0; iter <= iter_cap; ++iter) {
        res.iterations = iter;

        // Detection: smallest |y_j|.
        size_t jmin = 0;
        BigReal ymin = abs(y[0]);
        for (size_t j = 1; j < n; ++j) {
            BigReal a = abs(y[j]);
            if (a < ymin) {
                ymin = a;
                jmin = j;
            }
        }
        if (mpfr_nan_p(ymin.get())) {
            res.status = PslqStatus::Indeterminate;
            return res;
        }
        if (ymin < eps) {
            finish_found(jmin);
            return res;
        }

        // Norm bound: 1 / max_j |H_jj|.
        BigReal hmax = abs(H[0][0]);
        for (size_t j = 1; j + 1 < n; ++j) {
            BigReal a = abs(H[j][j]);
            if (a > hmax)
                hmax = a;
        }
        BigReal bound = BigReal::of_long(1, prec) / hmax;
        if (bound > res.norm_bound)
            res.norm_bound = bound;
        if (res.norm_bound > max_norm_r) {
            res.status = PslqStatus::Excluded;
            return res;
        }

        // Row selection: maximize gamma^(j+1) |H_jj|, lowest index on ties.
        size_t m = 0;
        BigReal best(prec);
        BigReal gpow = BigReal::of_long(1, prec);
        for (size_t j = 0; j + 1 < n; ++j) {
            gpow *= gamma;
            BigReal score = gpow * abs(H[j][j]);
            if (j == 0 || score > best) {
                best = score;
                m = j;
            }
        }

        std::swap(y[m], y[m + 1]);
        std::swap(H[m], H[m + 1]);
        for (size_t l = 0; l < n; ++l)
            std::swap(B[l][m], B[l][m + 1]);

        if (m + 2 < n) {
            // Givens rotation restoring lower-trapezoidal shape in columns m, m+1.
            BigReal t0 = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
            BigReal c = H[m][m] / t0;
            BigReal d = H[m][m + 1] / t0;
            for (size_t i = m; i < n; ++i) {
                BigReal a = H[i][m];
                BigReal b = H[i][m + 1];
                H[i][m] = c * a + d * b;
                H[i][m + 1] = c * b - d * a;
            }
        }

        reduce(m, std::min(m + 1, n - 2));
    }

    res.status = PslqStatus::Indeterminate;
    return res;
}

}  // namespace zetaforge
