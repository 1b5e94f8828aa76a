#pragma once

#include <utility>
#include <vector>

#include "galmod/rational.hpp"

namespace galmod {

// Dense univariate polynomial helpers.  Coefficient vectors are little
// endian (index = degree); the empty vector is the zero polynomial.

void polyz_trim(std::vector<Integer>& p);
long polyz_deg(const std::vector<Integer>& p);  // -1 for zero

// Exact division; throws BadDescriptor if the division is not exact.
std::vector<Integer> polyz_divexact(const std::vector<Integer>& num,
                                    const std::vector<Integer>& den);

// Exact resultant over Z (modular CRT implementation, with a
// pseudo-remainder-sequence reference used in tests).
Integer polyz_resultant(std::vector<Integer> a, std::vector<Integer> b);
Integer polyz_resultant_prs(std::vector<Integer> a, std::vector<Integer> b);

// Rational-coefficient helpers (used by the cyclotomic inverse).
void polyq_trim(std::vector<Rational>& p);
std::vector<Rational> polyq_mul(const std::vector<Rational>& a,
                                const std::vector<Rational>& b);
std::vector<Rational> polyq_sub(const std::vector<Rational>& a,
                                const std::vector<Rational>& b);
// quotient and remainder; denominator must be nonzero
std::pair<std::vector<Rational>, std::vector<Rational>> polyq_divmod(
    const std::vector<Rational>& a, const std::vector<Rational>& b);

// numerator of q rescaled to denominator den (den must be a multiple of den(q))
inline Integer c_num_scaled(const Rational& q, const Integer& den) {
    Integer f = den / q.get_den();
    return q.get_num() * f;
}

}  // namespace galmod
