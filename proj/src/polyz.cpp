#include "galmod/polyz.hpp"

#include <algorithm>
#include <cmath>

#include "galmod/errors.hpp"
#include "galmod/numtheory.hpp"

namespace galmod {

void polyz_trim(std::vector<Integer>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long polyz_deg(const std::vector<Integer>& p) {
    return static_cast<long>(p.size()) - 1;
}

std::vector<Integer> polyz_divexact(const std::vector<Integer>& num,
                                    const std::vector<Integer>& den) {
    std::vector<Integer> r(num), q;
    polyz_trim(r);
    std::vector<Integer> d(den);
    polyz_trim(d);
    if (d.empty()) throw BadDescriptor("polynomial division by zero");
    if (r.size() < d.size()) {
        if (r.empty()) return {};
        throw BadDescriptor("polynomial division not exact");
    }
    q.assign(r.size() - d.size() + 1, Integer(0));
    const Integer& lead = d.back();
    for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
        Integer& top = r[k + d.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw BadDescriptor("polynomial division not exact");
        Integer c = top / lead;
        q[k] = c;
        for (size_t i = 0; i < d.size(); ++i) r[k + i] -= c * d[i];
    }
    polyz_trim(r);
    if (!r.empty()) throw BadDescriptor("polynomial division not exact");
    return q;
}

namespace {

Integer polyz_content(const std::vector<Integer>& p) {
    Integer g = 0;
    for (const auto& c : p) g = gcd(g, c);
    return g == 0 ? Integer(1) : g;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b
std::vector<Integer> polyz_prem(std::vector<Integer> r, const std::vector<Integer>& b) {
    long da = polyz_deg(r), db = polyz_deg(b);
    const Integer& lb = b.back();
    long e = da - db + 1;
    while (!r.empty() && polyz_deg(r) >= db) {
        long dr = polyz_deg(r);
        Integer lr = r.back();
        for (auto& c : r) c *= lb;
        for (long i = 0; i <= db; ++i) r[dr - db + i] -= lr * b[i];
        polyz_trim(r);
        --e;
    }
    while (e-- > 0)
        for (auto& c : r) c *= lb;
    return r;
}

}  // namespace

namespace {

// resultant over F_p by the Euclidean remainder sequence
long resultant_mod_p(std::vector<long> a, std::vector<long> b, long p) {
    auto trim = [](std::vector<long>& f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
    };
    auto inv_p = [p](long x) {
        long r0 = p, r1 = x, s0 = 0, s1 = 1;
        while (r1 != 0) {
            long q = r0 / r1;
            std::swap(r0 -= q * r1, r1);
            std::swap(s0 -= q * s1, s1);
        }
        return ((s0 % p) + p) % p;
    };
    auto mulp = [p](long x, long y) {
        return static_cast<long>(static_cast<unsigned __int128>(x) * y % p);
    };
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    long res = 1;
    for (;;) {
        long da = static_cast<long>(a.size()) - 1;
        long db = static_cast<long>(b.size()) - 1;
        if (db == 0) {
            long base = b[0], e = da, acc = 1;
            while (e > 0) {
                if (e & 1) acc = mulp(acc, base);
                base = mulp(base, base);
                e >>= 1;
            }
            return mulp(res, acc);
        }
        if (da < db) {
            if ((da & 1) && (db & 1)) res = (p - res) % p;
            std::swap(a, b);
            continue;
        }
        // r = a mod b
        long inv_lead = inv_p(b[db]);
        std::vector<long> r = a;
        while (static_cast<long>(r.size()) - 1 >= db) {
            long dr = static_cast<long>(r.size()) - 1;
            long c = mulp(r[dr], inv_lead);
            if (c != 0)
                for (long i = 0; i <= db; ++i)
                    r[dr - db + i] = ((r[dr - db + i] - mulp(c, b[i])) % p + p) % p;
            r.pop_back();
            trim(r);
            if (r.empty()) break;
        }
        if (r.empty()) return 0;
        long dr = static_cast<long>(r.size()) - 1;
        // Res(a, b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
        if ((da & 1) && (db & 1)) res = (p - res) % p;
        long lead = b[db], e = da - dr, acc = 1;
        while (e > 0) {
            if (e & 1) acc = mulp(acc, lead);
            lead = mulp(lead, lead);
            e >>= 1;
        }
        res = mulp(res, acc);
        a = std::move(b);
        b = std::move(r);
    }
}

double log2_l2norm(const std::vector<Integer>& f) {
    double acc = 0;
    for (const auto& c : f) {
        double d = std::abs(mpz_get_d(c.get_mpz_t()));
        acc += d * d;
        if (!std::isfinite(acc)) return 8192;  // generous fallback
    }
    double l2 = std::sqrt(std::max(acc, 1.0));
    return std::log2(l2) + 1;
}

}  // namespace

// Exact resultant by Chinese remaindering word-size modular images; the
// Hadamard bound |Res| <= ||a||^deg(b) ||b||^deg(a) caps the lift.
Integer polyz_resultant(std::vector<Integer> a, std::vector<Integer> b) {
    polyz_trim(a);
    polyz_trim(b);
    if (a.empty() || b.empty()) return 0;
    long da = polyz_deg(a), db = polyz_deg(b);
    if (da == 0 && db == 0) return 1;

    // exact bit bound on |Res| plus one sign bit
    double bound_bits = db * log2_l2norm(a) + da * log2_l2norm(b) + 2;

    Integer modulus = 1, res = 0;
    long p = (1L << 62) - 57;  // start below 2^62 and walk down over primes
    double have_bits = 0;
    while (have_bits < bound_bits) {
        while (!is_prime(p)) --p;
        bool lead_ok = mpz_divisible_ui_p(a.back().get_mpz_t(), p) == 0 &&
                       mpz_divisible_ui_p(b.back().get_mpz_t(), p) == 0;
        if (lead_ok) {
            auto reduce = [p](const std::vector<Integer>& f) {
                std::vector<long> out(f.size());
                for (size_t i = 0; i < f.size(); ++i) {
                    Integer r = f[i] % p;
                    if (r < 0) r += p;
                    out[i] = r.get_si();
                }
                return out;
            };
            long rp = resultant_mod_p(reduce(a), reduce(b), p);
            if (modulus == 1) {
                res = rp;
                modulus = p;
            } else {
                // CRT: x = res mod modulus, x = rp mod p
                Integer pm = modulus;
                Integer inv;
                Integer pz(p);
                if (mpz_invert(inv.get_mpz_t(), pm.get_mpz_t(), pz.get_mpz_t()) == 0)
                    throw BadDescriptor("CRT modulus clash");
                Integer diff = ((Integer(rp) - res) % p + p) % p;
                Integer t = (diff * inv) % p;
                res += pm * t;
                modulus *= p;
            }
            have_bits += std::log2(double(p));
        }
        --p;
    }
    // center lift
    if (res * 2 > modulus) res -= modulus;
    return res;
}

Integer polyz_resultant_prs(std::vector<Integer> a, std::vector<Integer> b) {
    polyz_trim(a);
    polyz_trim(b);
    if (a.empty() || b.empty()) return 0;

    Rational acc(1);
    // maintain Res(a0, b0) = acc * Res(a, b)
    for (;;) {
        long da = polyz_deg(a), db = polyz_deg(b);
        if (db == 0) {
            Integer r = 1;
            for (long i = 0; i < da; ++i) r *= b[0];
            Rational out = acc * Rational(r);
            out.canonicalize();
            if (out.get_den() != 1)
                throw BadDescriptor("resultant accumulator did not clear");
            return out.get_num();
        }
        if (da < db) {
            if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
            std::swap(a, b);
            continue;
        }
        // rational remainder r_q satisfies prem(a,b) = lc(b)^(da-db+1) * r_q
        std::vector<Integer> r = polyz_prem(a, b);
        if (r.empty()) return 0;
        long dr = polyz_deg(r);
        Integer cont = polyz_content(r);
        for (auto& c : r) c /= cont;

        const Integer& lb = b.back();
        long e = da - db + 1;
        // Res(a,b) = (-1)^(da db) lb^(da-dr) Res(b, r_q),
        // Res(b, r) = (lb^e cont^-1 scaling)^db Res(b, r_q) handled below
        Rational factor(1);
        if ((da % 2 == 1) && (db % 2 == 1)) factor = -factor;
        // lb^(da - dr) / lb^(e db) and cont^db from primitive part
        Integer lb_pow_num = 1, lb_pow_den = 1, cont_pow = 1;
        for (long i = 0; i < da - dr; ++i) lb_pow_num *= lb;
        for (long i = 0; i < e * db; ++i) lb_pow_den *= lb;
        for (long i = 0; i < db; ++i) cont_pow *= cont;
        factor *= Rational(lb_pow_num * cont_pow) / Rational(lb_pow_den);
        acc *= factor;
        acc.canonicalize();
        a = std::move(b);
        b = std::move(r);
    }
}

void polyq_trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rational> polyq_mul(const std::vector<Rational>& a,
                                const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    polyq_trim(out);
    return out;
}

std::vector<Rational> polyq_sub(const std::vector<Rational>& a,
                                const std::vector<Rational>& b) {
    std::vector<Rational> out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    polyq_trim(out);
    return out;
}

std::pair<std::vector<Rational>, std::vector<Rational>> polyq_divmod(
    const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(a), q;
    polyq_trim(r);
    std::vector<Rational> d(b);
    polyq_trim(d);
    if (d.empty()) throw BadDescriptor("polynomial division by zero");
    if (r.size() < d.size()) return {q, r};
    q.assign(r.size() - d.size() + 1, Rational(0));
    Rational inv_lead = 1 / d.back();
    for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
        Rational c = r[k + d.size() - 1] * inv_lead;
        if (c == 0) continue;
        q[k] = c;
        for (size_t i = 0; i < d.size(); ++i) r[k + i] -= c * d[i];
    }
    polyq_trim(r);
    return {q, r};
}

}  // namespace galmod
