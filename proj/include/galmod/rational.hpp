#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "galmod/errors.hpp"

namespace galmod {

// Exact arithmetic is carried by GMP throughout: mpz_class for integers,
// mpq_class for rationals.  mpq_class is always stored canonicalized
// (gcd 1, positive denominator), which matches the Rational invariants.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Serialization format: decimal digit strings, "n" for integers and
// "n/d" otherwise.
inline std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw BadDescriptor("cannot parse rational '" + s + "'");
    q.canonicalize();
    return q;
}

inline long checked_long(const Integer& z, const char* what) {
    if (!z.fits_slong_p()) throw SizeLimit(std::string(what) + " out of range");
    return z.get_si();
}

// v_p(n) for nonzero n.
inline long int_valuation(Integer n, const Integer& p) {
    if (n == 0) throw ZeroValuation("valuation of zero integer");
    long v = 0;
    n = abs(n);
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

// v_p extended to rationals.
inline long rat_valuation(const Rational& q, const Integer& p) {
    if (q == 0) throw ZeroValuation("valuation of zero rational");
    long v = 0;
    if (q.get_num() != 0) v += int_valuation(q.get_num(), p);
    v -= int_valuation(q.get_den(), p);
    return v;
}

}  // namespace galmod
