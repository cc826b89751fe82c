#pragma once

#include <gmpxx.h>

#include <string>

#include "tsmzv/errors.hpp"

namespace tsmzv {

// All exact arithmetic runs over GMP rationals, kept canonical (lowest terms,
// positive denominator) by mpq_class itself.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// binom(n, r) for n >= 0; zero for r < 0 or r > n.
inline Int binomial(long n, long r) {
    if (r < 0 || r > n) return Int(0);
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

/// x^e with e possibly negative; x must be nonzero for e < 0.
inline Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (x == 0 && e < 0) throw SingularityError("rat_pow: 0 raised to negative power");
    Rat base = e < 0 ? Rat(1) / x : x;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

/// Lowest-terms string: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rational(const std::string& s) {
    Rat r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw ArgumentError("not a rational: '" + s + "'");
    if (r.get_den() == 0) throw ArgumentError("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

} // namespace tsmzv
