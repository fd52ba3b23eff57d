// Arbitrary-precision numeric substrate: decimal-digit precision contexts,
// MPFR-backed reals, GMP rationals, Bernoulli numbers and factorials.
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zetaforge {

// Decimal digit budget plus derived internal parameters. Every numeric
// operation in the library is performed under one of these.
struct PrecisionContext {
    long digits = 50;
    long guard = 20;

    long working_digits() const { return digits + guard; }

    // Binary precision covering working_digits decimal digits with slack.
    mpfr_prec_t prec_bits() const {
        return static_cast<mpfr_prec_t>(
            static_cast<long>(std::ceil(working_digits() * 3.3219280948873626)) + 16);
    }
};

inline PrecisionContext ctx_new(long digits) {
    if (digits < 10)
        throw std::invalid_argument("precision: digits must be >= 10, got " +
                                    std::to_string(digits));
    PrecisionContext ctx;
    ctx.digits = digits;
    ctx.guard = std::max(20L, digits / 10);
    return ctx;
}

// Value-semantic wrapper around mpfr_t. The precision is fixed per value;
// binary operations produce results at the wider of the two operand
// precisions.
class BigReal {
  public:
    explicit BigReal(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }

    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }

    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigReal() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static BigReal of_long(long x, mpfr_prec_t prec) {
        BigReal r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }

    static BigReal of_mpz(const mpz_class& x, mpfr_prec_t prec) {
        BigReal r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    static BigReal of_mpq(const mpq_class& x, mpfr_prec_t prec) {
        BigReal r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend int cmp(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return cmp(a, b) != 0; }

  private:
    mpfr_t v_;

    static mpfr_prec_t join(const BigReal& a, const BigReal& b) {
        return std::max(a.prec(), b.prec());
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a) {
        BigReal r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend BigReal operator*(const BigReal& a, long b) {
        BigReal r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(long a, const BigReal& b) { return b * a; }
    friend BigReal operator/(const BigReal& a, long b) {
        BigReal r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    friend BigReal operator*(const BigReal& a, const mpz_class& b) {
        BigReal r(a.prec());
        mpfr_mul_z(r.v_, a.v_, b.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const mpz_class& b) {
        BigReal r(a.prec());
        mpfr_div_z(r.v_, a.v_, b.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    friend BigReal& operator+=(BigReal& a, const BigReal& b) {
        mpfr_add(a.v_, a.v_, b.v_, MPFR_RNDN);
        return a;
    }
    friend BigReal& operator-=(BigReal& a, const BigReal& b) {
        mpfr_sub(a.v_, a.v_, b.v_, MPFR_RNDN);
        return a;
    }
    friend BigReal& operator*=(BigReal& a, const BigReal& b) {
        mpfr_mul(a.v_, a.v_, b.v_, MPFR_RNDN);
        return a;
    }
    friend BigReal& operator/=(BigReal& a, const BigReal& b) {
        mpfr_div(a.v_, a.v_, b.v_, MPFR_RNDN);
        return a;
    }
};

inline BigReal abs(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_abs(r.get(), a.get(), MPFR_RNDN);
    return r;
}

inline BigReal sqrt(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
    return r;
}

// 10^e at the given precision; handy for tolerance thresholds.
inline BigReal pow10(long e, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(std::labs(e)), MPFR_RNDN);
    if (e < 0)
        mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
    return r;
}

// x^n for integer n (n may be negative).
inline BigReal pow_si(const BigReal& x, long n) {
    BigReal r(x.prec());
    mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

// Nearest-integer rounding to an exact integer.
inline mpz_class round_to_mpz(const BigReal& x) {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), x.get(), MPFR_RNDN);
    return z;
}

// Decimal serialization. With ndigits == 0 MPFR emits enough digits for an
// exact binary round-trip at the value's precision; that form is what the
// sum cache persists.
inline std::string to_string(const BigReal& x, size_t ndigits = 0) {
    if (x.is_zero())
        return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, ndigits, x.get(), MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // digits represents 0.DDDD * 10^e; render as D.DDD e(e-1)
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1)
        out += "." + digits.substr(1);
    long exp10 = static_cast<long>(e) - 1;
    if (exp10 != 0)
        out += "e" + std::string(exp10 > 0 ? "+" : "") + std::to_string(exp10);
    return out;
}

inline BigReal from_string(const std::string& s, mpfr_prec_t prec) {
    BigReal r(prec);
    if (mpfr_set_str(r.get(), s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigReal: cannot parse decimal string '" + s + "'");
    return r;
}

inline BigReal pi(const PrecisionContext& ctx) {
    BigReal r(ctx.prec_bits());
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

// e^x. The library only ever needs moderate arguments (2*pi*k for k up to a
// few hundred); larger ones would blow the digit budget.
inline BigReal exp(const BigReal& x, const PrecisionContext& ctx) {
    BigReal ax = abs(x);
    if (mpfr_cmp_ui(ax.get(), 1000000) > 0)
        throw std::range_error("exp: |x| exceeds supported range 10^6");
    BigReal r(ctx.prec_bits());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

inline mpz_class factorial(unsigned long n) {
    if (n > 100000)
        throw std::invalid_argument("factorial: n too large");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace detail {

// Even-index Bernoulli numbers via the defining recurrence
//   sum_{j=0}^{m} C(m+1, j) B_j = 0,  B_0 = 1, B_1 = -1/2,
// restricted to even rows (odd B_j vanish for j >= 3, and B_1 enters each
// even row as -C(m+1,1)/2). The table is grown on demand and shared.
class BernoulliTable {
  public:
    // B_{2i} for i = index/2; m must be even.
    mpq_class get(unsigned long m) {
        std::lock_guard<std::mutex> lock(mu_);
        while (even_.size() <= m / 2)
            grow_locked();
        return even_[m / 2];
    }

  private:
    std::vector<mpq_class> even_{mpq_class(1)};  // B_0
    std::mutex mu_;

    void grow_locked() {
        unsigned long m = 2 * even_.size();  // next even index
        mpq_class acc = 0;
        for (unsigned long j = 0; j + 2 <= m; j += 2)
            acc += mpq_class(binomial(m + 1, j)) * even_[j / 2];
        // B_1 contribution: C(m+1,1) * (-1/2)
        acc -= mpq_class(m + 1, 2);
        mpq_class b = -acc / mpq_class(m + 1);
        b.canonicalize();
        even_.push_back(b);
    }
};

inline BernoulliTable& bernoulli_table() {
    static BernoulliTable t;
    return t;
}

}  // namespace detail

inline mpq_class bernoulli(unsigned long m) {
    if (m % 2 != 0)
        throw std::invalid_argument("bernoulli: index must be even, got " + std::to_string(m));
    if (m > 2000)
        throw std::invalid_argument("bernoulli: index exceeds supported range 2000");
    return detail::bernoulli_table().get(m);
}

}  // namespace zetaforge
