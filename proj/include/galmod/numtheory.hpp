#pragma once

#include <cstdint>
#include <vector>

#include "galmod/rational.hpp"

namespace galmod {

// Elementary number theory over machine integers.  All moduli handled by
// the library are desk scale (conductors and cyclotomic levels up to a
// few thousand), so 64-bit arithmetic with overflow-safe mulmod suffices.

long gcd_ll(long a, long b);
long lcm_ll(long a, long b);
long mul_mod(long a, long b, long m);
long pow_mod(long a, long e, long m);
long inv_mod(long a, long m);  // throws InvalidGaloisIndex if gcd(a,m) != 1

bool is_prime(long n);
std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> divisors(long n);  // sorted ascending
long euler_phi(long n);
bool is_squarefree(long n);
std::vector<long> primes_up_to(long bound);

// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
long mult_order(long a, long m);

// Smallest primitive root modulo an odd prime power p^k (or 2, 4).
long primitive_root(long pk);

// CRT for two coprime moduli.
long crt_pair(long r1, long m1, long r2, long m2);

}  // namespace galmod
