#include "galmod/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "galmod/errors.hpp"

namespace galmod {

long gcd_ll(long a, long b) { return std::gcd(a, b); }

long lcm_ll(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

long mul_mod(long a, long b, long m) {
    return static_cast<long>(static_cast<unsigned __int128>(a % m + m) % m *
                             static_cast<unsigned long>((b % m + m) % m) % m);
}

long pow_mod(long a, long e, long m) {
    if (m == 1) return 0;
    long r = 1;
    a = ((a % m) + m) % m;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

long inv_mod(long a, long m) {
    long g = std::gcd(((a % m) + m) % m, m);
    if (g != 1) throw InvalidGaloisIndex("not invertible mod " + std::to_string(m));
    // extended Euclid
    long r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        std::swap(r0 -= q * r1, r1);
        std::swap(s0 -= q * s1, s1);
    }
    return ((s0 % m) + m) % m;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit range
    long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        long x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long> divisors(long n) {
    std::vector<long> out{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = out.size();
        long pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long euler_phi(long n) {
    long r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

bool is_squarefree(long n) {
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> ps;
    for (long n = 2; n <= bound; ++n)
        if (is_prime(n)) ps.push_back(n);
    return ps;
}

long mult_order(long a, long m) {
    if (std::gcd(((a % m) + m) % m, m) != 1)
        throw InvalidGaloisIndex("order of non-unit mod " + std::to_string(m));
    long order = 1;
    long x = ((a % m) + m) % m;
    long cur = x;
    while (cur != 1 % m) {
        cur = mul_mod(cur, x, m);
        ++order;
    }
    return order;
}

long primitive_root(long pk) {
    if (pk == 1) return 1;
    if (pk == 2) return 1;
    if (pk == 4) return 3;
    auto fac = factorize(pk);
    if (fac.size() != 1 || fac[0].first == 2)
        throw BadDescriptor("primitive_root expects odd prime power (or 2, 4)");
    long p = fac[0].first;
    long phi = euler_phi(pk);
    auto qs = factorize(phi);
    for (long g = 2; g < pk; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (auto [q, e] : qs) {
            if (pow_mod(g, phi / q, pk) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw BadDescriptor("no primitive root found");  // unreachable for valid input
}

long crt_pair(long r1, long m1, long r2, long m2) {
    // x = r1 mod m1, x = r2 mod m2 with gcd(m1, m2) = 1
    long m = m1 * m2;
    long x = mul_mod(r1, mul_mod(m2, inv_mod(m2, m1), m), m) +
             mul_mod(r2, mul_mod(m1, inv_mod(m1, m2), m), m);
    return ((x % m) + m) % m;
}

}  // namespace galmod
