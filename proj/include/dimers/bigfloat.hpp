#pragma once

#include <gmpxx.h>

#include "dimers/errors.hpp"
#include "dimers/numeric.hpp"

namespace dimers {

// 256-bit fixed-precision floats: enough for the ~50 guaranteed bits the
// monotonicity and MGF checks need, with a wide safety margin.
inline constexpr int kFloatBits = 256;

inline mpf_class make_float(double v = 0.0) { return mpf_class(v, kFloatBits); }

inline mpf_class to_float(const Rational& q) {
    mpf_class num(q.get_num(), kFloatBits), den(q.get_den(), kFloatBits);
    return num / den;
}

namespace detail {

// log via atanh series after scaling into [1, 2): argument t <= 1/3 gains
// more than 3 bits per term
inline mpf_class log_mantissa(const mpf_class& m) {
    mpf_class t = (m - 1) / (m + 1);
    mpf_class t2 = t * t, term = t, sum(0, kFloatBits);
    for (unsigned long k = 0; k < 2 + kFloatBits / 3; ++k) {
        sum += term / (2 * k + 1);
        term *= t2;
    }
    return 2 * sum;
}

inline const mpf_class& log2_const() {
    static const mpf_class v = log_mantissa(mpf_class(2, kFloatBits));
    return v;
}

}  // namespace detail

inline mpf_class log_float(const mpf_class& x) {
    if (x <= 0) throw ValidationError("log of a non-positive value");
    long e;
    mpf_get_d_2exp(&e, x.get_mpf_t());  // x = m * 2^e with m in [0.5, 1)
    mpf_class m(x, kFloatBits);
    if (e >= 0)
        mpf_div_2exp(m.get_mpf_t(), m.get_mpf_t(), static_cast<unsigned long>(e));
    else
        mpf_mul_2exp(m.get_mpf_t(), m.get_mpf_t(), static_cast<unsigned long>(-e));
    // m in [0.5, 1): double it and drop one from the exponent
    m *= 2;
    return detail::log_mantissa(m) + (e - 1) * detail::log2_const();
}

inline mpf_class log_rational(const Rational& q) { return log_float(to_float(q)); }

inline mpf_class exp_float(const mpf_class& x) {
    // x = k*log2 + r with |r| <= log2/2, then a plain Taylor series for e^r
    mpf_class kf = x / detail::log2_const();
    mpf_class kfloor;
    mpf_floor(kfloor.get_mpf_t(), mpf_class(kf + 0.5).get_mpf_t());
    long k = static_cast<long>(mpf_get_si(kfloor.get_mpf_t()));
    mpf_class r = x - k * detail::log2_const();
    mpf_class term(1, kFloatBits), sum(1, kFloatBits);
    for (unsigned long i = 1; i < 80; ++i) {
        term *= r;
        term /= i;
        sum += term;
    }
    if (k >= 0)
        mpf_mul_2exp(sum.get_mpf_t(), sum.get_mpf_t(), static_cast<unsigned long>(k));
    else
        mpf_div_2exp(sum.get_mpf_t(), sum.get_mpf_t(), static_cast<unsigned long>(-k));
    return sum;
}

inline mpf_class sqrt_float(const mpf_class& x) {
    mpf_class r(0, kFloatBits);
    mpf_sqrt(r.get_mpf_t(), x.get_mpf_t());
    return r;
}

}  // namespace dimers
