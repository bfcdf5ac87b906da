#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "steinx/error.hpp"

namespace steinx {

// Arbitrary-precision integers and rationals. All matrix and cohomology
// arithmetic runs on these; intermediate entries of a Smith reduction can
// grow far past 64 bits.
using Int = mpz_class;
using Rat = mpq_class;

// mpz_class converts from long but not long long; route all 64-bit
// conversions through here.
static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");

inline Int int_from_i64(long long v) { return Int(static_cast<long>(v)); }

inline Int int_abs(const Int& a) { return abs(a); }

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g; // nonnegative by GMP convention
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// ceil(num / den) for den > 0.
inline Int ceil_div(const Int& num, const Int& den) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// floor(num / den) for den > 0.
inline Int floor_div(const Int& num, const Int& den) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// Nonnegative representative of a mod m, m > 0.
inline Int mod_nonneg(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline std::string int_to_string(const Int& a) { return a.get_str(); }

inline Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw Error("not a decimal integer: \"" + s + "\"");
    }
}

inline bool fits_int64(const Int& a) { return a.fits_slong_p(); }

inline long long to_int64(const Int& a) {
    if (!a.fits_slong_p()) throw Error("integer too large for a 64-bit field: " + a.get_str());
    return static_cast<long long>(a.get_si());
}

} // namespace steinx
