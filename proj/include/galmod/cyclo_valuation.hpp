#pragma once

#include <vector>

#include "galmod/cyclo.hpp"
#include "galmod/rational.hpp"

namespace galmod {

// A prime of Z[zeta_N] above p, indexed by the corresponding irreducible
// factor of Phi_M mod p where M is the prime-to-p part of N.  Factors are
// listed in lexicographic coefficient order, which fixes the indexing.
struct CycloPrime {
    long index;
    long e;                    // ramification index, phi(p^{v_p(N)})
    long f_deg;                // residue degree, ord of p mod M
    std::vector<long> factor;  // monic factor of Phi_M mod p, little endian
};

struct CycloValuations {
    long p;
    std::vector<CycloPrime> primes;
    std::vector<long> valuations;  // parallel to primes; v_p(p) = e
};

// Exact valuations of a nonzero cyclotomic number at every prime above p.
// The identity sum_i valuations[i] * f_deg[i] = v_p(|Norm(a)|) holds.
CycloValuations cyclo_valuations(const CycloNumber& a, long p);

// Degree-normalized total valuation v_p(|Norm(a)|) / phi(level): a
// presentation-independent rational, additive in a.
Rational cyclo_tv(const CycloNumber& a, long p);

// Irreducible factors of Phi_M mod p for p coprime to M, each of degree
// ord_M(p), sorted lexicographically.  Deterministic.
std::vector<std::vector<long>> factor_cyclotomic_mod_p(long M, long p);

}  // namespace galmod
