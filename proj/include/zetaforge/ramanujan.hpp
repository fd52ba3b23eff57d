// Ramanujan's exact formulas for zeta(4n+3) and zeta(4n+1): a Bernoulli
// double sum in exact rationals plus exponentially convergent hyperbolic
// sums. The (2pi)^(4n+..) prefactor cancels against the Bernoulli part, so
// evaluation runs with extra internal guard digits proportional to n.
#pragma once

#include <stdexcept>
#include <vector>

#include "precision.hpp"
#include "zeta.hpp"

namespace zetaforge {

enum class RamanujanFamily { Zeta4n3, Zeta4n1 };

struct RamanujanResult {
    RamanujanFamily family;
    int n = 0;
    BigReal rhs_value;
    BigReal zeta_reference;
    BigReal abs_diff;
    long digits = 0;
};

// sum_{k=0}^{2n+2} (-1)^(k+1) B_2k/(2k)! B_(4n+4-2k)/(4n+4-2k)!, exact.
inline mpq_class ramanujan_rational_part_4n3(int n) {
    if (n < 0)
        throw std::invalid_argument("ramanujan: n must be >= 0");
    mpq_class acc = 0;
    for (int k = 0; k <= 2 * n + 2; ++k) {
        unsigned long a = 2 * static_cast<unsigned long>(k);
        unsigned long b = 4 * static_cast<unsigned long>(n) + 4 - a;
        mpq_class term = bernoulli(a) / mpq_class(factorial(a));
        term *= bernoulli(b) / mpq_class(factorial(b));
        if (k % 2 == 0)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

// (1/(2n)) sum_{k=0}^{2n+1} (-1)^(k+1) (2k-1) B_2k/(2k)! B_(4n+2-2k)/(4n+2-2k)!
inline mpq_class ramanujan_rational_part_4n1(int n) {
    if (n < 1)
        throw std::invalid_argument("ramanujan 4n+1: n must be >= 1 (1/(2n) prefactor)");
    mpq_class acc = 0;
    for (int k = 0; k <= 2 * n + 1; ++k) {
        unsigned long a = 2 * static_cast<unsigned long>(k);
        unsigned long b = 4 * static_cast<unsigned long>(n) + 2 - a;
        mpq_class term = bernoulli(a) / mpq_class(factorial(a));
        term *= bernoulli(b) / mpq_class(factorial(b));
        term *= 2 * k - 1;
        if (k % 2 == 0)
            acc -= term;
        else
            acc += term;
    }
    return acc / (2 * n);
}

namespace detail {

inline long exponential_sum_cutoff(long working_digits) {
    // e^(-2 pi K) < 10^-working_digits
    return static_cast<long>(std::ceil(working_digits * 2.302585092994046 /
                                       (2 * 3.141592653589793))) + 5;
}

}  // namespace detail

// zeta(4n+3) = (1/2)[(2pi)^(4n+3) * rational part - 4 sum_k k^(-4n-3)/(e^(2pi k)-1)]
inline BigReal ramanujan_4n3(int n, const PrecisionContext& ctx, long ke_override = 0) {
    if (n < 0 || n > 10)
        throw std::invalid_argument("ramanujan 4n+3: n must be in 0..10");
    PrecisionContext ictx = ctx;
    ictx.guard += 35L * n + 10;
    const mpfr_prec_t prec = ictx.prec_bits();
    const int s = 4 * n + 3;

    BigReal two_pi = pi(ictx) * 2;
    BigReal bern_part = BigReal::of_mpq(ramanujan_rational_part_4n3(n), prec) *
                        pow_si(two_pi, s);

    const long Ke = ke_override > 0 ? ke_override
                                    : detail::exponential_sum_cutoff(ictx.working_digits());
    BigReal q = exp(two_pi, ictx);  // e^(2 pi)
    BigReal p = BigReal::of_long(1, prec);
    BigReal esum(prec);
    mpz_class kpow;
    for (long k = 1; k <= Ke; ++k) {
        p *= q;
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(s));
        esum += BigReal::of_long(1, prec) / ((p - BigReal::of_long(1, prec)) * kpow);
    }

    BigReal result = (bern_part - esum * 4) / 2;
    BigReal out(ctx.prec_bits());
    mpfr_set(out.get(), result.get(), MPFR_RNDN);
    return out;
}

// zeta(4n+1) = (1/2)[(2pi)^(4n+1) * rational part
//                    - 4 sum_k k^(-4n-1)/(e^(2pi k)-1)
//                    - (pi/n) sum_k k^(-4n)/sinh^2(pi k)]
inline BigReal ramanujan_4n1(int n, const PrecisionContext& ctx, long ke_override = 0) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("ramanujan 4n+1: n must be in 1..10");
    PrecisionContext ictx = ctx;
    ictx.guard += 35L * n + 10;
    const mpfr_prec_t prec = ictx.prec_bits();
    const int s = 4 * n + 1;

    BigReal pi_v = pi(ictx);
    BigReal two_pi = pi_v * 2;
    BigReal bern_part = BigReal::of_mpq(ramanujan_rational_part_4n1(n), prec) *
                        pow_si(two_pi, s);

    const long Ke = ke_override > 0 ? ke_override
                                    : detail::exponential_sum_cutoff(ictx.working_digits());
    BigReal q = exp(two_pi, ictx);       // e^(2 pi)
    BigReal qh = exp(pi_v, ictx);        // e^(pi)
    BigReal one = BigReal::of_long(1, prec);
    BigReal p = one;
    BigReal ph = one;
    BigReal esum(prec), hsum(prec);
    mpz_class kpow;
    for (long k = 1; k <= Ke; ++k) {
        p *= q;
        ph *= qh;
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(s));
        esum += one / ((p - one) * kpow);
        // sinh(pi k) = (e^(pi k) - e^(-pi k))/2
        BigReal sinh_pk = (ph - one / ph) / 2;
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(s - 1));
        hsum += one / (sinh_pk * sinh_pk * kpow);
    }

    BigReal result = (bern_part - esum * 4 - (pi_v / n) * hsum) / 2;
    BigReal out(ctx.prec_bits());
    mpfr_set(out.get(), result.get(), MPFR_RNDN);
    return out;
}

inline std::vector<RamanujanResult> verify_ramanujan(RamanujanFamily family, int n_from,
                                                     int n_to, const PrecisionContext& ctx) {
    std::vector<RamanujanResult> out;
    for (int n = n_from; n <= n_to; ++n) {
        RamanujanResult r{family, n, BigReal(ctx.prec_bits()), BigReal(ctx.prec_bits()),
                          BigReal(ctx.prec_bits()), ctx.digits};
        int s;
        if (family == RamanujanFamily::Zeta4n3) {
            r.rhs_value = ramanujan_4n3(n, ctx);
            s = 4 * n + 3;
        } else {
            r.rhs_value = ramanujan_4n1(n, ctx);
            s = 4 * n + 1;
        }
        r.zeta_reference = zeta_int(s, ctx);
        r.abs_diff = abs(r.rhs_value - r.zeta_reference);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace zetaforge
