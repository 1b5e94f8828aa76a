#include "galmod/gauss.hpp"

#include <algorithm>
#include <numeric>

#include "galmod/errors.hpp"
#include "galmod/numtheory.hpp"

namespace galmod {

namespace {

long lift_unit(long u, long from_mod, long to_mod) {
    // some integer congruent to u mod from_mod and coprime to to_mod
    long k = ((u % from_mod) + from_mod) % from_mod;
    if (from_mod == 1) k = 1;
    if (k == 0) k = from_mod;  // only for from_mod == 1 handled above
    while (std::gcd(k, to_mod) != 1) k += from_mod;
    return k;
}

}  // namespace

void DirichletCharacter::finish(long modulus, long value_exponent_modulus,
                                std::map<long, long> raw) {
    modulus_ = modulus;
    long E = value_exponent_modulus;
    // order of chi = E / gcd(E, all exponents)
    long g = E;
    for (auto& [u, t] : raw) g = std::gcd(g, t);
    order_ = E / g;
    table_.clear();
    for (auto& [u, t] : raw) table_[u] = (t / g) % order_;

    // conductor: least divisor d of modulus with chi trivial on units = 1 mod d
    conductor_ = modulus_;
    for (long d : divisors(modulus_)) {
        bool trivial = true;
        for (auto& [u, s] : table_) {
            if (u % d == 1 % d && s != 0) {
                trivial = false;
                break;
            }
        }
        if (trivial) {
            conductor_ = d;
            break;
        }
    }
}

long DirichletCharacter::exponent_at(long a) const {
    long u = ((a % modulus_) + modulus_) % modulus_;
    auto it = table_.find(u);
    if (it == table_.end())
        throw BadDescriptor("character argument shares a factor with the modulus");
    return it->second;
}

CycloNumber DirichletCharacter::value(long a) const {
    long u = ((a % modulus_) + modulus_) % modulus_;
    auto it = table_.find(u);
    if (it == table_.end()) return CycloNumber(Rational(0));
    return CycloNumber::root_of_unity(order_, it->second);
}

long DirichletCharacter::parity() const {
    long s = exponent_at(modulus_ - 1 == 0 ? 0 : modulus_ - 1);
    if (s == 0) return 1;
    if (2 * s == order_) return -1;
    throw BadTable("character value at -1 is not +-1");
}

DirichletCharacter DirichletCharacter::primitive_part() const {
    if (is_primitive()) return *this;
    DirichletCharacter out;
    std::map<long, long> raw;
    for (long u = 0; u < conductor_; ++u) {
        if (std::gcd(u, conductor_) != 1 && conductor_ > 1) continue;
        long lifted = lift_unit(conductor_ == 1 ? 1 : u, conductor_, modulus_);
        raw[conductor_ == 1 ? 0 : u] = exponent_at(lifted);
    }
    if (conductor_ == 1) raw = {{0, 0}};
    out.finish(conductor_, order_, std::move(raw));
    return out;
}

DirichletCharacter DirichletCharacter::conj() const {
    DirichletCharacter out(*this);
    for (auto& [u, s] : out.table_) s = (order_ - s) % order_;
    return out;
}

DirichletCharacter DirichletCharacter::mul(const DirichletCharacter& o) const {
    long m = lcm_ll(modulus_, o.modulus_);
    long E = lcm_ll(order_, o.order_);
    std::map<long, long> raw;
    for (long u = 0; u < m; ++u) {
        if (m > 1 && std::gcd(u, m) != 1) continue;
        long uu = (m == 1) ? 0 : u;
        long t = (exponent_at(uu) * (E / order_) + o.exponent_at(uu) * (E / o.order_)) % E;
        raw[uu] = t;
    }
    DirichletCharacter out;
    out.finish(m, E, std::move(raw));
    return out;
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
    return modulus_ == o.modulus_ && order_ == o.order_ && table_ == o.table_;
}

DirichletCharacter make_dirichlet(long modulus, const std::vector<long>& dual_exponents) {
    UnitQuotient q = make_unit_quotient(modulus, {});
    Character chi(q.group, dual_exponents);
    long E = q.group.exponent();
    std::map<long, long> raw;
    for (long u : q.units->units()) raw[u] = chi.value_exponent(q.project(u));
    DirichletCharacter out;
    out.finish(modulus, E, std::move(raw));
    return out;
}

DirichletCharacter dirichlet_from_field_character(const AbelianField& L,
                                                  const Character& chi) {
    if (chi.group != L.galois_group()) throw GroupMismatch("field character");
    long E = L.galois_group().exponent();
    std::map<long, long> raw;
    for (long u : L.quotient().units->units())
        raw[u] = chi.value_exponent(L.quotient().project(u));
    DirichletCharacter out;
    out.finish(L.conductor(), E, std::move(raw));
    return out;
}

std::vector<DirichletCharacter> primitive_characters_mod(long f) {
    UnitQuotient q = make_unit_quotient(f, {});
    std::vector<DirichletCharacter> out;
    for (const auto& chi : characters_of(q.group)) {
        DirichletCharacter d = make_dirichlet(f, chi.exponents);
        if (d.conductor() == f) out.push_back(std::move(d));
    }
    return out;
}

CycloNumber gauss_sum(const DirichletCharacter& chi) {
    if (!chi.is_primitive())
        throw NotPrimitive("gauss_sum needs modulus = conductor (" +
                           std::to_string(chi.modulus()) + " vs " +
                           std::to_string(chi.conductor()) + ")");
    long f = chi.modulus();
    long o = chi.order();
    long N = lcm_ll(f, o);
    const CycloContext& ctx = cyclo_context(N);
    std::vector<Integer> acc(ctx.phi);
    for (long a = (f == 1 ? 0 : 1); a < std::max(f, 2L); ++a) {
        if (f > 1 && std::gcd(a, f) != 1) continue;
        long e = (chi.exponent_at(a) * (N / o) + a % f * (N / f)) % N;
        const auto& row = ctx.power_basis[e];
        for (long i = 0; i < ctx.phi; ++i) acc[i] += row[i];
        if (f == 1) break;
    }
    std::vector<Rational> coeffs(ctx.phi);
    for (long i = 0; i < ctx.phi; ++i) coeffs[i] = Rational(acc[i]);
    return CycloNumber(N, std::move(coeffs));
}

CycloNumber w_infinity(long degree, long trace_at_conjugation) {
    if (std::abs(trace_at_conjugation) > degree ||
        ((degree - trace_at_conjugation) % 2) != 0)
        throw BadTrace("conjugation trace must match the degree in size and parity");
    long codim = (degree - trace_at_conjugation) / 2;
    long e = ((-codim) % 4 + 4) % 4;
    return CycloNumber::root_of_unity(4, e);
}

CycloNumber epsilon_constant(const DirichletCharacter& chi) {
    CycloNumber tau = gauss_sum(chi);
    return tau * w_infinity(1, chi.parity());
}

CycloNumber unramified_characteristic(const DirichletCharacter& chi, long p) {
    DirichletCharacter prim = chi.primitive_part();
    long f = prim.conductor();
    if (f % p != 0) return CycloNumber(Rational(1));
    long ps = 1;
    long rest = f;
    while (rest % p == 0) {
        rest /= p;
        ps *= p;
    }
    if (rest == 1) return CycloNumber(Rational(1));  // chi is p-primary
    // evaluate the prime-to-p component at p: u = p mod rest, u = 1 mod p^s
    long u = crt_pair(((p % rest) + rest) % rest, rest, 1, ps);
    return prim.value(u);
}

long CharTable::group_order() const {
    long n = 0;
    for (long c : class_sizes) n += c;
    return n;
}

void CharTable::validate() const {
    size_t k = class_sizes.size();
    if (degrees.size() != k || power_map_2.size() != k || values.size() != k)
        throw BadTable("character table blocks must all have one row per class");
    for (const auto& row : values)
        if (row.size() != k) throw BadTable("ragged character table");
    long n = group_order();
    long sum_sq = 0;
    for (long d : degrees) sum_sq += d * d;
    if (sum_sq != n) throw BadTable("sum of squared degrees must be the group order");
    for (long c : power_map_2)
        if (c < 0 || c >= static_cast<long>(k)) throw BadTable("power map out of range");
    // column orthogonality: sum_i |chi_i(c)|^2 = |G| / class_size(c)
    for (size_t c = 0; c < k; ++c) {
        CycloNumber acc((Rational(0)));
        for (size_t i = 0; i < k; ++i)
            acc = acc + values[i][c] * values[i][c].conjugate();
        CycloNumber expect(make_rational(n, class_sizes[c]));
        if (acc != expect) throw BadTable("column orthogonality fails");
    }
}

std::vector<long> frobenius_schur_indicators(const CharTable& T) {
    long n = T.group_order();
    std::vector<long> out;
    for (size_t i = 0; i < T.values.size(); ++i) {
        CycloNumber acc((Rational(0)));
        for (size_t c = 0; c < T.class_sizes.size(); ++c)
            acc = acc + T.values[i][T.power_map_2[c]].scaled(Rational(T.class_sizes[c]));
        CycloNumber nu = acc.scaled(Rational(1, n));
        if (!nu.is_rational())
            throw BadTable("Frobenius-Schur indicator is not rational");
        Rational v = nu.rational_value();
        if (v != -1 && v != 0 && v != 1)
            throw BadTable("Frobenius-Schur indicator outside {-1,0,1}");
        out.push_back(checked_long(v.get_num(), "indicator"));
    }
    return out;
}

std::vector<size_t> symplectic_characters(const CharTable& T) {
    T.validate();
    auto ind = frobenius_schur_indicators(T);
    std::vector<size_t> out;
    for (size_t i = 0; i < ind.size(); ++i)
        if (ind[i] == -1) out.push_back(i);
    return out;
}

CycloNumber pfaffian(const CharTable& T, const SupplementedRamData& ram,
                     size_t char_index, long p) {
    auto symp = symplectic_characters(T);
    if (std::find(symp.begin(), symp.end(), char_index) == symp.end())
        throw BadDescriptor("pfaffian is defined on symplectic characters");
    long deg = T.degrees[char_index];
    Rational out(1);
    for (const auto& place : ram.places) {
        if (place.invariant_dims.size() != T.degrees.size())
            throw BadDescriptor("invariant dims must cover every irreducible");
        long dim = place.invariant_dims[char_index];
        if (dim < 0 || dim > deg)
            throw BadDescriptor("invariant dimension out of range");
        long twice_exp = place.residue_degree * (deg - dim);
        if (twice_exp % 2 != 0)
            throw NonIntegralExponent("half-integral Pfaffian exponent");
        long e = twice_exp / 2;
        for (long i = 0; i < e; ++i) out *= Rational(-p);
    }
    return CycloNumber(out);
}

}  // namespace galmod
