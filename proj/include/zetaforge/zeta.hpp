// zeta(s) for integer s >= 2. Even arguments use the closed form
// (-1)^(n+1) B_2n (2 pi)^2n / (2 (2n)!); odd arguments use Euler-Maclaurin
// with Bernoulli tail corrections.
#pragma once

#include <stdexcept>

#include "precision.hpp"

namespace zetaforge {

inline BigReal zeta_even_closed_form(int s, const PrecisionContext& ctx) {
    if (s < 2 || s % 2 != 0)
        throw std::invalid_argument("zeta_even_closed_form: s must be even and >= 2");
    int n = s / 2;
    mpq_class coeff = bernoulli(static_cast<unsigned long>(s)) /
                      mpq_class(2 * factorial(static_cast<unsigned long>(s)));
    if (n % 2 == 0)
        coeff = -coeff;
    BigReal two_pi = pi(ctx) * 2;
    return BigReal::of_mpq(coeff, ctx.prec_bits()) * pow_si(two_pi, s);
}

// Euler-Maclaurin evaluation, valid for any s >= 2:
//   zeta(s) = sum_{k=1}^{M-1} k^-s + M^(1-s)/(s-1) + M^-s/2
//           + sum_i B_2i/(2i)! (s)(s+1)...(s+2i-2) M^(-s-2i+1).
// Corrections are added until one falls below 10^-(working_digits+5); with
// M ~ 2*working_digits + s that happens well before the asymptotic series
// turns around. m_override pins M for cross-checking tests.
inline BigReal zeta_euler_maclaurin(int s, const PrecisionContext& ctx, long m_override = 0) {
    if (s < 2)
        throw std::invalid_argument("zeta: s must be >= 2");
    const long W = ctx.working_digits();
    const mpfr_prec_t prec = ctx.prec_bits();
    const long M = m_override > 0 ? m_override : 2 * W + s;

    BigReal acc(prec);
    mpz_class kpow;
    for (long k = 1; k < M; ++k) {
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(s));
        BigReal term(prec);
        mpfr_set_z(term.get(), kpow.get_mpz_t(), MPFR_RNDN);
        mpfr_ui_div(term.get(), 1, term.get(), MPFR_RNDN);
        acc += term;
    }

    BigReal mf = BigReal::of_long(M, prec);
    acc += pow_si(mf, 1 - s) / (s - 1);
    acc += pow_si(mf, -s) / 2;

    const BigReal threshold = pow10(-(W + 5), prec);
    const BigReal m2inv = pow_si(mf, -2);
    mpz_class poch = 1;  // (s)(s+1)...(s+2i-2)
    BigReal mpow = pow_si(mf, -s + 1) * m2inv;  // M^(-s-2i+1) at i=1
    BigReal prev_mag(prec);
    for (long i = 1;; ++i) {
        if (i == 1)
            poch = s;
        else
            poch *= mpz_class(s + 2 * i - 3) * mpz_class(s + 2 * i - 2);
        mpq_class b = bernoulli(static_cast<unsigned long>(2 * i)) /
                      mpq_class(factorial(static_cast<unsigned long>(2 * i)));
        BigReal term = BigReal::of_mpq(b, prec) * mpow * poch;
        BigReal mag = abs(term);
        if (i > 1 && mag > prev_mag)
            throw std::runtime_error("zeta: Euler-Maclaurin corrections diverging; M too small");
        acc += term;
        if (mag < threshold)
            break;
        prev_mag = mag;
        mpow *= m2inv;
    }
    return acc;
}

inline BigReal zeta_int(int s, const PrecisionContext& ctx) {
    if (s < 2)
        throw std::invalid_argument("zeta: s must be >= 2");
    return s % 2 == 0 ? zeta_even_closed_form(s, ctx) : zeta_euler_maclaurin(s, ctx);
}

}  // namespace zetaforge
