#include "galmod/fields.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "galmod/errors.hpp"
#include "galmod/intmat.hpp"

namespace galmod {

namespace {

// kernel of reduction (Z/f)^x -> (Z/f')^x inside the mod-f units
std::vector<long> reduction_kernel(const UnitGroup& units, long f_prime) {
    std::vector<long> out;
    for (long u : units.units())
        if (u % f_prime == 1 % f_prime) out.push_back(u);
    return out;
}

bool contains_all(const std::vector<long>& sorted_set, const std::vector<long>& items) {
    for (long x : items)
        if (!std::binary_search(sorted_set.begin(), sorted_set.end(), x)) return false;
    return true;
}

}  // namespace

AbelianField build_field(long f, const std::vector<long>& kernel_generators) {
    if (f < 1) throw BadDescriptor("conductor must be positive");
    for (long g : kernel_generators)
        if (std::gcd(((g % f) + f) % f, f) != 1)
            throw BadSubgroup("kernel generator " + std::to_string(g) +
                              " not coprime to " + std::to_string(f));

    UnitGroup units(f);
    std::vector<long> H = units.subgroup_closure(kernel_generators);

    // true conductor: smallest divisor whose reduction kernel lies in H
    long f0 = f;
    for (long d : divisors(f)) {
        if (contains_all(H, reduction_kernel(units, d))) {
            f0 = d;
            break;
        }
    }

    AbelianField L;
    if (f0 == f) {
        L.conductor_ = f;
        L.quotient_ = make_unit_quotient(f, H);
        return L;
    }
    // re-present at the true conductor
    std::vector<long> H0;
    for (long u : H) H0.push_back(u % f0);
    L.conductor_ = f0;
    L.quotient_ = make_unit_quotient(f0, H0);
    return L;
}

bool AbelianField::tame() const { return is_squarefree(conductor_); }

CycloNumber AbelianField::apply(const GroupElement& g, const CycloNumber& x) const {
    if (g.group != galois_group()) throw GroupMismatch("field automorphism");
    long u = quotient_.section(g);
    if (x.level() == conductor_) return x.galois_apply(u);
    // act through a compatible unit at the element's own level
    long lev = x.level();
    if (lev % conductor_ == 0) {
        // choose k = u mod conductor, k = 1 mod lev/conductor-coprime part
        long rest = lev;
        long cond_part = 1;
        // split lev = a*b with a sharing primes with conductor only
        for (auto [p, e] : factorize(lev)) {
            long pe = 1;
            for (int i = 0; i < e; ++i) pe *= p;
            if (conductor_ % p == 0) cond_part *= pe;
            (void)pe;
        }
        rest = lev / cond_part;
        long k = (rest == 1) ? (u % cond_part + (cond_part == 1 ? 0 : 0))
                             : crt_pair(u % cond_part, cond_part, 1, rest);
        if (rest == 1) k = u % cond_part;
        // k must reduce to u mod conductor (conductor | cond_part)
        return x.galois_apply(k == 0 ? cond_part : k);
    }
    return x.at_level(lcm_ll(lev, conductor_)).galois_apply(u);
}

Rational AbelianField::trace(const CycloNumber& x) const {
    CycloNumber acc((Rational(0)));
    for (const auto& g : group_elements()) acc = acc + apply(g, x);
    CycloNumber down = acc.at_level(1);
    return down.rational_value();
}

bool AbelianField::contains(const CycloNumber& x) const {
    CycloNumber lifted = x.at_level(conductor_);
    for (long h : kernel())
        if (lifted.galois_apply(h) != lifted) return false;
    return true;
}

CycloNumber AbelianField::nib_generator() const {
    if (!tame())
        throw WildRamification("conductor " + std::to_string(conductor_) +
                               " is not squarefree");
    const CycloContext& ctx = cyclo_context(conductor_);
    std::vector<Rational> coeffs(ctx.phi);
    for (long h : kernel()) {
        long k = (conductor_ == 1) ? 0 : h;
        const auto& row = ctx.power_basis[k];
        for (long i = 0; i < ctx.phi; ++i)
            if (row[i] != 0) coeffs[i] += Rational(row[i]);
    }
    CycloNumber alpha(conductor_, std::move(coeffs));

    // verification: the Galois orbit must be a Z-basis of O_L, which is
    // equivalent to det(Tr(g_i(alpha) g_j(alpha))) = +- disc(L); all
    // resolvents must also be nonzero
    auto gs = group_elements();
    long n = degree();
    std::vector<CycloNumber> orbit;
    orbit.reserve(n);
    for (const auto& g : gs) orbit.push_back(apply(g, alpha));

    IntegerMatrix gram(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = i; j < n; ++j) {
            Rational t = trace(orbit[i] * orbit[j]);
            if (t.get_den() != 1)
                throw BadDescriptor("non-integral trace in NIB verification");
            gram.at(i, j) = t.get_num();
            gram.at(j, i) = t.get_num();
        }
    Integer det = gram.determinant();
    if (abs(det) != discriminant())
        throw BadDescriptor("trace generator fails the integral-basis check");
    for (const auto& chi : characters())
        if (lagrange_resolvent(*this, alpha, chi).is_zero())
            throw BadDescriptor("trace generator has a vanishing resolvent");
    return alpha;
}

RamificationDatum AbelianField::ramification_data(long p) const {
    if (!is_prime(p)) throw BadDescriptor("ramification prime must be prime");
    RamificationDatum out;
    out.prime = p;

    long f = conductor_;
    long s = 0, ps = 1;
    while (f % p == 0) {
        f /= p;
        ++s;
        ps *= p;
    }
    // f is now the prime-to-p part of the conductor

    std::set<std::vector<long>> inertia_set;
    if (s == 0) {
        inertia_set.insert(GroupElement::identity(galois_group()).exponents);
    } else {
        // inertia = image of units congruent to 1 mod conductor/p^s
        for (long u : quotient_.units->units()) {
            if (u % f == 1 % f) inertia_set.insert(quotient_.project(u).exponents);
        }
    }
    for (const auto& e : inertia_set) out.inertia.emplace_back(galois_group(), e);
    out.e = static_cast<long>(out.inertia.size());

    // Frobenius (coset mod inertia): image of p on the prime-to-p part
    long frob_unit;
    if (s == 0) {
        frob_unit = ((p % conductor_) + conductor_) % conductor_;
    } else {
        long pf = ((p % f) + f) % f;
        frob_unit = (f == 1) ? 1 % conductor_ : crt_pair(pf, f, 1, ps);
        if (conductor_ == 1) frob_unit = 0;
    }
    GroupElement frob = quotient_.project(frob_unit);

    // residue degree: order of Frobenius modulo inertia
    auto in_inertia = [&](const GroupElement& x) {
        return inertia_set.count(x.exponents) > 0;
    };
    long fd = 1;
    GroupElement cur = frob;
    while (!in_inertia(cur)) {
        cur = cur.mul(frob);
        ++fd;
    }
    out.f_deg = fd;

    // canonical lift: smallest exponent vector in the coset frob * inertia
    GroupElement best = frob;
    for (const auto& t : out.inertia) {
        GroupElement cand = frob.mul(t);
        if (cand.exponents < best.exponents) best = cand;
    }
    out.frobenius_class = best;

    out.g = degree() / (out.e * out.f_deg);
    return out;
}

long AbelianField::character_conductor(const Character& chi) const {
    if (chi.group != galois_group()) throw GroupMismatch("character conductor");
    for (long d : divisors(conductor_)) {
        bool trivial_on_kernel = true;
        for (long u : quotient_.units->units()) {
            if (u % d != 1 % d) continue;
            if (chi.value_exponent(quotient_.project(u)) != 0) {
                trivial_on_kernel = false;
                break;
            }
        }
        if (trivial_on_kernel) return d;
    }
    return conductor_;
}

Integer AbelianField::discriminant() const {
    Integer d = 1;
    for (const auto& chi : characters()) d *= character_conductor(chi);
    return d;
}

std::vector<AbelianField> enumerate_tame_fields(long max_conductor, long max_degree) {
    std::vector<AbelianField> out;
    for (long f = 1; f <= max_conductor; ++f) {
        if (!is_squarefree(f)) continue;
        if (f > 1 && f % 4 == 2) continue;  // conductor never 2 mod 4
        UnitQuotient full = make_unit_quotient(f, {});
        auto chars = characters_of(full.group);
        std::set<std::vector<long>> seen;
        for (size_t i = 0; i < chars.size(); ++i) {
            for (size_t j = i; j < chars.size(); ++j) {
                // kernel of the pair
                std::vector<long> H;
                for (long u : full.units->units()) {
                    GroupElement e = full.project(u);
                    if (chars[i].value_exponent(e) == 0 && chars[j].value_exponent(e) == 0)
                        H.push_back(u);
                }
                long index = full.units->order() / static_cast<long>(H.size());
                if (index > max_degree) continue;
                if (!seen.insert(H).second) continue;
                AbelianField L = build_field(f, H);
                if (L.conductor() != f) continue;  // counted at its own conductor
                out.push_back(std::move(L));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const AbelianField& a, const AbelianField& b) {
        if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
        return a.kernel() < b.kernel();
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const AbelianField& a, const AbelianField& b) {
                              return a.conductor() == b.conductor() &&
                                     a.kernel() == b.kernel();
                          }),
              out.end());
    return out;
}

CycloNumber lagrange_resolvent(const AbelianField& L, const CycloNumber& alpha,
                               const Character& chi) {
    long E = L.galois_group().exponent();
    CycloNumber acc((Rational(0)));
    for (const auto& g : L.group_elements()) {
        CycloNumber term = L.apply(g, alpha) *
                           CycloNumber::root_of_unity(E, (E - chi.value_exponent(g)) % E);
        acc = acc + term;
    }
    return acc;
}

}  // namespace galmod
