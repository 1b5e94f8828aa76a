#include "galmod/cyclo_valuation.hpp"

#include <algorithm>
#include <numeric>

#include "galmod/errors.hpp"
#include "galmod/numtheory.hpp"
#include "galmod/polyz.hpp"

namespace galmod {

namespace {

// ---- polynomial arithmetic over F_p, coefficients in [0, p) ----

using PolyP = std::vector<long>;

void ptrim(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP pmul(const PolyP& a, const PolyP& b, long p) {
    if (a.empty() || b.empty()) return {};
    PolyP out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
    ptrim(out);
    return out;
}

PolyP psub(const PolyP& a, const PolyP& b, long p) {
    PolyP out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] = ((out[i] - b[i]) % p + p) % p;
    ptrim(out);
    return out;
}

// remainder of a by monic-normalizable b
PolyP pmod(PolyP a, const PolyP& b, long p) {
    long db = static_cast<long>(b.size()) - 1;
    long inv_lead = inv_mod(b.back(), p);
    while (static_cast<long>(a.size()) - 1 >= db) {
        long da = static_cast<long>(a.size()) - 1;
        long c = mul_mod(a.back(), inv_lead, p);
        if (c != 0)
            for (long i = 0; i <= db; ++i)
                a[da - db + i] = ((a[da - db + i] - mul_mod(c, b[i], p)) % p + p) % p;
        a.pop_back();
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PolyP pdiv(PolyP a, const PolyP& b, long p) {
    long db = static_cast<long>(b.size()) - 1;
    long inv_lead = inv_mod(b.back(), p);
    if (static_cast<long>(a.size()) - 1 < db) return {};
    PolyP q(a.size() - db, 0);
    for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
        long idx = k + db;
        if (idx >= static_cast<long>(a.size())) continue;
        long c = mul_mod(a[idx], inv_lead, p);
        if (c == 0) continue;
        q[k] = c;
        for (long i = 0; i <= db; ++i)
            a[k + i] = ((a[k + i] - mul_mod(c, b[i], p)) % p + p) % p;
    }
    ptrim(a);
    if (!a.empty()) throw BadDescriptor("mod-p division not exact");
    return q;
}

PolyP pgcd(PolyP a, PolyP b, long p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PolyP r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv_lead = inv_mod(a.back(), p);
        for (auto& c : a) c = mul_mod(c, inv_lead, p);
    }
    return a;
}

PolyP ppow_mod(PolyP base, const Integer& e, const PolyP& mod, long p) {
    PolyP r{1};
    base = pmod(std::move(base), mod, p);
    for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        r = pmod(pmul(r, r, p), mod, p);
        if (mpz_tstbit(e.get_mpz_t(), bit)) r = pmod(pmul(r, base, p), mod, p);
    }
    return r;
}

// extended Euclid mod p: returns (g, s, t) with s a + t b = g, g monic
std::tuple<PolyP, PolyP, PolyP> pxgcd(PolyP a, PolyP b, long p) {
    PolyP s0{1}, s1{}, t0{}, t1{1};
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a = q b + r
        PolyP q;
        {
            PolyP r = a;
            long db = static_cast<long>(b.size()) - 1;
            long inv_lead = inv_mod(b.back(), p);
            if (static_cast<long>(r.size()) - 1 >= db) {
                q.assign(r.size() - db, 0);
                for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
                    long idx = k + db;
                    if (idx >= static_cast<long>(r.size())) continue;
                    long c = mul_mod(r[idx], inv_lead, p);
                    if (c == 0) continue;
                    q[k] = c;
                    for (long i = 0; i <= db; ++i)
                        r[k + i] = ((r[k + i] - mul_mod(c, b[i], p)) % p + p) % p;
                    ptrim(r);
                }
            }
            ptrim(q);
            a.swap(b);
            b = std::move(r);
            ptrim(b);
        }
        PolyP s2 = psub(s0, pmul(q, s1, p), p);
        PolyP t2 = psub(t0, pmul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!a.empty()) {
        long inv_lead = inv_mod(a.back(), p);
        for (auto& c : a) c = mul_mod(c, inv_lead, p);
        for (auto& c : s0) c = mul_mod(c, inv_lead, p);
        for (auto& c : t0) c = mul_mod(c, inv_lead, p);
    }
    return {a, s0, t0};
}

// deterministic splittable RNG for equal-degree splitting
struct SplitRng {
    unsigned long state;
    long next(long p) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 17) % static_cast<unsigned long>(p));
    }
};

void equal_degree_split(const PolyP& f, long d, long p, SplitRng& rng,
                        std::vector<PolyP>& out) {
    long df = static_cast<long>(f.size()) - 1;
    if (df == d) {
        out.push_back(f);
        return;
    }
    for (;;) {
        PolyP r(df);
        for (long i = 0; i < df; ++i) r[i] = rng.next(p);
        ptrim(r);
        if (r.empty()) continue;
        PolyP g;
        if (p == 2) {
            // trace map r + r^2 + ... + r^(2^(d-1))
            PolyP t = pmod(r, f, p), acc = t;
            for (long i = 1; i < d; ++i) {
                t = pmod(pmul(t, t, p), f, p);
                acc = psub(acc, t, p);  // == add mod 2
            }
            g = pgcd(f, acc, p);
        } else {
            Integer e = 1;
            for (long i = 0; i < d; ++i) e *= p;
            e = (e - 1) / 2;
            PolyP t = ppow_mod(r, e, f, p);
            if (!t.empty()) t[0] = ((t[0] - 1) % p + p) % p;
            ptrim(t);
            g = pgcd(f, t, p);
        }
        long dg = static_cast<long>(g.size()) - 1;
        if (dg > 0 && dg < df) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(pdiv(f, g, p), d, p, rng, out);
            return;
        }
    }
}

// ---- integer polynomials modulo p^K (Hensel lifting) ----

using PolyZ = std::vector<Integer>;

PolyZ to_polyz(const PolyP& f) {
    PolyZ out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[i];
    return out;
}

PolyP to_polyp(const PolyZ& f, long p) {
    PolyP out(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Integer r = f[i] % p;
        if (r < 0) r += p;
        out[i] = r.get_si();
    }
    ptrim(out);
    return out;
}

PolyZ zmul(const PolyZ& a, const PolyZ& b) {
    if (a.empty() || b.empty()) return {};
    PolyZ out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

void zmod_coeffs(PolyZ& f, const Integer& m) {
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
    }
    polyz_trim(f);
}

// Hensel-lift the factor h of Phi (monic, coprime to cofactor mod p) from
// mod p to mod p^K; returns the lifted monic factor with coefficients in
// [0, p^K).
PolyZ hensel_lift_factor(const PolyZ& Phi, const PolyP& h, long p, long K) {
    PolyP phi_p = to_polyp(Phi, p);
    PolyP c = pdiv(phi_p, h, p);
    auto [g, sigma, tau] = pxgcd(h, c, p);
    if (g.size() != 1)
        throw BadDescriptor("factor not coprime to cofactor in Hensel lift");

    PolyZ B = to_polyz(h), C = to_polyz(c);
    Integer mod = p;
    for (long j = 1; j < K; ++j) {
        Integer next_mod = mod * p;
        // e = (Phi - B*C) / p^j mod p
        PolyZ diff = zmul(B, C);
        for (size_t i = 0; i < diff.size(); ++i) diff[i] = -diff[i];
        for (size_t i = 0; i < Phi.size(); ++i) {
            if (i >= diff.size()) diff.resize(Phi.size());
            diff[i] += Phi[i];
        }
        PolyP e(diff.size());
        for (size_t i = 0; i < diff.size(); ++i) {
            Integer q = diff[i] / mod;  // exact: B*C == Phi mod p^j
            Integer r = q % p;
            if (r < 0) r += p;
            e[i] = r.get_si();
        }
        ptrim(e);
        PolyP deltaB = e.empty() ? PolyP{} : pmod(pmul(tau, e, p), h, p);
        // deltaC = (e - C*deltaB) / B over F_p
        PolyP rhs = psub(e, pmul(to_polyp(C, p), deltaB, p), p);
        PolyP deltaC = rhs.empty() ? PolyP{} : pdiv(rhs, h, p);
        for (size_t i = 0; i < deltaB.size(); ++i) {
            if (i >= B.size()) B.resize(deltaB.size());
            B[i] += mod * deltaB[i];
        }
        for (size_t i = 0; i < deltaC.size(); ++i) {
            if (i >= C.size()) C.resize(deltaC.size());
            C[i] += mod * deltaC[i];
        }
        mod = next_mod;
        zmod_coeffs(B, mod);
        zmod_coeffs(C, mod);
        // keep monic leading terms intact
        if (B.size() != h.size()) throw BadDescriptor("Hensel lift degree drift");
    }
    return B;
}

}  // namespace

std::vector<std::vector<long>> factor_cyclotomic_mod_p(long M, long p) {
    if (M % p == 0) throw BadDescriptor("factor_cyclotomic_mod_p needs p coprime to M");
    std::vector<Integer> phiM = cyclotomic_polynomial(M);
    PolyP f(phiM.size());
    for (size_t i = 0; i < phiM.size(); ++i) {
        Integer r = phiM[i] % p;
        if (r < 0) r += p;
        f[i] = r.get_si();
    }
    ptrim(f);
    long d = (M == 1) ? 1 : mult_order(p, M);
    std::vector<PolyP> factors;
    if (static_cast<long>(f.size()) - 1 == 0)
        throw BadDescriptor("degenerate cyclotomic polynomial");
    SplitRng rng{0x9E3779B97F4A7C15ULL ^ (static_cast<unsigned long>(M) << 20) ^
                 static_cast<unsigned long>(p)};
    equal_degree_split(f, d, p, rng, factors);
    std::sort(factors.begin(), factors.end());
    return factors;
}

CycloValuations cyclo_valuations(const CycloNumber& a, long p) {
    if (a.is_zero()) throw ZeroValuation("valuations of zero");
    if (!is_prime(p)) throw BadDescriptor("p must be prime");
    long N = a.level();
    long s = 0, ps = 1;
    long M = N;
    while (M % p == 0) {
        M /= p;
        ++s;
        ps *= p;
    }
    long e = (s == 0) ? 1 : euler_phi(ps);

    // norm down to the unramified layer Q(zeta_M)
    CycloNumber b = a;
    if (s > 0) {
        CycloNumber prod(Rational(1));
        for (long k = 1; k <= N; ++k) {
            if (std::gcd(k, N) != 1 || k % M != 1 % M) continue;
            prod = prod * a.galois_apply(k);
        }
        b = prod.at_level(M);
    }

    long d = (M == 1) ? 1 : mult_order(p, M);
    auto factors = factor_cyclotomic_mod_p(M, p);

    CycloValuations out;
    out.p = p;

    auto [num, den] = b.integer_form();
    polyz_trim(num);
    long den_val = int_valuation(den, p);

    // valuation budget bounds the Hensel precision
    std::vector<Integer> phiM = cyclotomic_polynomial(M);
    Integer res_total = polyz_resultant(phiM, num);
    if (res_total == 0) throw BadDescriptor("norm vanished unexpectedly");
    long K = int_valuation(res_total, p) + 2;

    Integer pK = 1;
    for (long i = 0; i < K; ++i) pK *= p;

    for (size_t i = 0; i < factors.size(); ++i) {
        long v_num;
        if (M == 1) {
            // Q(zeta_1) = Q; single prime (p)
            v_num = int_valuation(num[0], p);
        } else {
            PolyZ lifted = hensel_lift_factor(phiM, factors[i], p, K);
            Integer r = polyz_resultant(lifted, num);
            // true resultant agrees mod p^K; valuation < K by the budget
            Integer rm = r % pK;
            if (rm < 0) rm += pK;
            if (rm == 0)
                throw BadDescriptor("Hensel precision exhausted");
            v_num = int_valuation(rm, p);
            if (v_num % d != 0)
                throw BadDescriptor("non-integral valuation from resultant");
            v_num /= d;
        }
        CycloPrime prime;
        prime.index = static_cast<long>(i);
        prime.e = e;
        prime.f_deg = d;
        prime.factor = factors[i];
        out.primes.push_back(std::move(prime));
        out.valuations.push_back(v_num - den_val);
    }
    return out;
}

Rational cyclo_tv(const CycloNumber& a, long p) {
    if (a.is_zero()) throw ZeroValuation("tv of zero");
    Rational nm = cyclo_norm(a);
    long phi = cyclo_context(a.level()).phi;
    Rational out(rat_valuation(nm, Integer(p)), phi);
    out.canonicalize();
    return out;
}

}  // namespace galmod
