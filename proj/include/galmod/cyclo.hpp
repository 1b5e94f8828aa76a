#pragma once

#include <vector>

#include "galmod/bigfloat.hpp"
#include "galmod/rational.hpp"

namespace galmod {

// Cached per-level data for Q(zeta_N): the N-th cyclotomic polynomial and
// the reduction table x^k mod Phi_N for 0 <= k < N.  Contexts are built on
// first use and shared; access is thread safe.
struct CycloContext {
    long level;
    long phi;
    std::vector<Integer> cyclotomic;               // Phi_N, monic, length phi+1
    std::vector<std::vector<Integer>> power_basis;  // x^k mod Phi_N, k in [0, N)
};

const CycloContext& cyclo_context(long level);

// Integer coefficients of Phi_N (exposed for tests and valuation code).
std::vector<Integer> cyclotomic_polynomial(long N);

// An exact element of Q(zeta_N): rational coordinates in the power basis
// 1, zeta, ..., zeta^{phi(N)-1} modulo Phi_N.  Values are immutable after
// construction; all operations are pure.  Binary operations lift both
// operands to the lcm of their levels.
class CycloNumber {
public:
    CycloNumber() : CycloNumber(Rational(0)) {}
    explicit CycloNumber(const Rational& q);
    explicit CycloNumber(long n) : CycloNumber(Rational(n)) {}
    CycloNumber(long level, std::vector<Rational> coeffs);

    // zeta_N^k
    static CycloNumber root_of_unity(long level, long k);

    long level() const { return level_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws BadDescriptor if not rational

    friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
    CycloNumber operator-() const;
    CycloNumber scaled(const Rational& q) const;

    CycloNumber inverse() const;  // throws NonInvertible on zero
    CycloNumber conjugate() const;  // the Galois element zeta -> zeta^{-1}
    CycloNumber galois_apply(long k) const;  // zeta -> zeta^k, gcd(k, level) = 1
    CycloNumber mul_zeta(long e) const;      // multiply by zeta_level^e

    bool operator==(const CycloNumber& b) const;
    bool operator!=(const CycloNumber& b) const { return !(*this == b); }

    // Re-present at another cyclotomic level.  Lifting to a multiple is
    // always possible; descending requires membership in Q(zeta_M) and
    // throws BadDescriptor otherwise.
    CycloNumber at_level(long M) const;

    // Smallest divisor M of level with this element in Q(zeta_M).
    long min_level() const;
    CycloNumber canonicalized() const { return at_level(min_level()); }

    // Numerical value under zeta_N -> exp(2 pi i j / N).
    ComplexApprox embed(long j, long precision_bits) const;

    // Common denominator form: primitive integer coefficient vector and
    // positive denominator with content coprime conventions not enforced.
    std::pair<std::vector<Integer>, Integer> integer_form() const;

private:
    long level_;
    std::vector<Rational> coeffs_;
};

// Absolute norm N_{Q(zeta_N)/Q}(a) as an exact rational, computed at the
// stored level (product of all Galois conjugates via a resultant).
Rational cyclo_norm(const CycloNumber& a);

}  // namespace galmod
