// Exact-arithmetic scalar types and small integer helpers shared by all
// modules. Integers are GMP mpz, rationals GMP mpq (always canonical).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hecke {

using Int = mpz_class;
using Rat = mpq_class;

// Floor of sqrt(n). Requires n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline long pow_long(long base, unsigned e) {
    long r = 1;
    while (e--) r *= base;
    return r;
}

// Rounds a non-negative exact rational to `digits` significant decimal
// digits (half-even ties) and renders it %g-style: fixed notation, no
// trailing zeros. Exact integer arithmetic throughout, so output is
// platform-stable.
std::string decimal_string(const Rat& value, int digits = 10);

// decimal_string of q*sqrt(r) with q >= 0 rational, r >= 1 integer.
std::string decimal_string_sqrt(const Rat& q, const Int& r, int digits = 10);

}  // namespace hecke
