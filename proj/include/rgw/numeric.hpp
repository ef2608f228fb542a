#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rgw {

// All arithmetic in the engine is exact. Integers are arbitrary precision
// and rationals are always kept in lowest terms with positive denominator
// (gmp canonicalizes on construction and after every operation).
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// base^exp for integer exp of either sign; base must be nonzero when exp < 0.
inline Rational qpow(const Rational& base, long exp) {
    if (exp >= 0) {
        Rational r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
        r.canonicalize();
        return r;
    }
    Rational inv = 1 / base;
    return qpow(inv, -exp);
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace rgw
