#pragma once

#include <gmpxx.h>

#include <string>

#include "dimers/errors.hpp"

namespace dimers {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt pow_big(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline unsigned long to_ulong_exp(const BigInt& e) {
    if (e < 0 || !e.fits_ulong_p()) throw Error("exponent out of range: " + e.get_str());
    return e.get_ui();
}

inline Rational pow_rat(const Rational& base, const BigInt& e) {
    if (e < 0) {
        if (base == 0) throw SingularDenominatorError("0 raised to negative power");
        Rational inv = 1 / base;
        return pow_rat(inv, -e);
    }
    unsigned long ue = to_ulong_exp(e);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), ue);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), ue);
    return r;  // base canonical => powers canonical
}

// Exact integer square root; throws if the argument is not a perfect square.
inline BigInt sqrt_exact(const BigInt& x) {
    if (x < 0) throw NotASquareError("negative value has no integer square root");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    if (r * r != x) throw NotASquareError("not a perfect square: " + x.get_str());
    return r;
}

inline Rational sqrt_exact(const Rational& x) {
    Rational r;
    r.get_num() = sqrt_exact(BigInt(x.get_num()));
    r.get_den() = sqrt_exact(BigInt(x.get_den()));
    return r;
}

// Parses "p" or "p/q" into a canonical rational.
inline Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed rational: " + s);
    }
}

inline std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

}  // namespace dimers
