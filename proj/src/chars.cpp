#include "galmod/chars.hpp"

#include <algorithm>
#include <numeric>

#include "galmod/errors.hpp"
#include "galmod/intmat.hpp"

namespace galmod {

FinAbGroup::FinAbGroup(std::vector<long> invariant_factors) : d_(std::move(invariant_factors)) {
    for (size_t i = 0; i < d_.size(); ++i) {
        if (d_[i] < 2) throw BadDescriptor("invariant factors must be >= 2");
        if (i + 1 < d_.size() && d_[i + 1] % d_[i] != 0)
            throw BadDescriptor("invariant factors must form a divisibility chain");
    }
}

long FinAbGroup::order() const {
    long n = 1;
    for (long d : d_) n *= d;
    return n;
}

long FinAbGroup::exponent() const { return d_.empty() ? 1 : d_.back(); }

namespace {

std::vector<long> reduce_exponents(const FinAbGroup& g, std::vector<long> e) {
    const auto& d = g.invariant_factors();
    if (e.size() != d.size()) throw GroupMismatch("exponent vector has wrong rank");
    for (size_t i = 0; i < e.size(); ++i) {
        e[i] %= d[i];
        if (e[i] < 0) e[i] += d[i];
    }
    return e;
}

long enum_index(const FinAbGroup& g, const std::vector<long>& e) {
    long idx = 0;
    const auto& d = g.invariant_factors();
    for (size_t i = 0; i < d.size(); ++i) idx = idx * d[i] + e[i];
    return idx;
}

}  // namespace

GroupElement::GroupElement(FinAbGroup g, std::vector<long> e)
    : group(std::move(g)), exponents(reduce_exponents(group, std::move(e))) {}

GroupElement GroupElement::identity(const FinAbGroup& g) {
    return GroupElement(g, std::vector<long>(g.rank(), 0));
}

GroupElement GroupElement::mul(const GroupElement& o) const {
    if (group != o.group) throw GroupMismatch("group element multiplication");
    std::vector<long> e(exponents);
    for (size_t i = 0; i < e.size(); ++i) e[i] += o.exponents[i];
    return GroupElement(group, std::move(e));
}

GroupElement GroupElement::inverse() const {
    std::vector<long> e(exponents);
    for (auto& x : e) x = -x;
    return GroupElement(group, std::move(e));
}

GroupElement GroupElement::pow(long k) const {
    std::vector<long> e(exponents);
    const auto& d = group.invariant_factors();
    for (size_t i = 0; i < e.size(); ++i) {
        long kk = ((k % d[i]) + d[i]) % d[i];
        e[i] = (e[i] * kk) % d[i];
    }
    return GroupElement(group, std::move(e));
}

bool GroupElement::is_identity() const {
    return std::all_of(exponents.begin(), exponents.end(), [](long x) { return x == 0; });
}

long GroupElement::order() const {
    const auto& d = group.invariant_factors();
    long o = 1;
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        long oi = d[i] / std::gcd(d[i], exponents[i]);
        o = lcm_ll(o, oi);
    }
    return o;
}

Character::Character(FinAbGroup g, std::vector<long> e)
    : group(std::move(g)), exponents(reduce_exponents(group, std::move(e))) {}

Character Character::trivial(const FinAbGroup& g) {
    return Character(g, std::vector<long>(g.rank(), 0));
}

bool Character::is_trivial() const {
    return std::all_of(exponents.begin(), exponents.end(), [](long x) { return x == 0; });
}

long Character::order() const {
    const auto& d = group.invariant_factors();
    long o = 1;
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        o = lcm_ll(o, d[i] / std::gcd(d[i], exponents[i]));
    }
    return o;
}

long Character::value_exponent(const GroupElement& g) const {
    if (group != g.group) throw GroupMismatch("character evaluation");
    long E = group.exponent();
    const auto& d = group.invariant_factors();
    long acc = 0;
    for (size_t i = 0; i < exponents.size(); ++i) {
        long term = (exponents[i] % E) * ((g.exponents[i] * (E / d[i])) % E) % E;
        acc = (acc + term) % E;
    }
    return acc;
}

CycloNumber Character::eval(const GroupElement& g) const {
    long E = group.exponent();
    return CycloNumber::root_of_unity(E, value_exponent(g));
}

Character Character::mul(const Character& o) const {
    if (group != o.group) throw GroupMismatch("character multiplication");
    std::vector<long> e(exponents);
    for (size_t i = 0; i < e.size(); ++i) e[i] += o.exponents[i];
    return Character(group, std::move(e));
}

Character Character::conj() const {
    std::vector<long> e(exponents);
    for (auto& x : e) x = -x;
    return Character(group, std::move(e));
}

Character Character::galois(long k) const {
    if (std::gcd(((k % group.exponent()) + group.exponent()) % group.exponent(),
                 group.exponent()) != 1)
        throw InvalidGaloisIndex("galois index not coprime to group exponent");
    std::vector<long> e(exponents);
    for (auto& x : e) x *= (k % group.exponent() + group.exponent()) % group.exponent();
    return Character(group, std::move(e));
}

std::vector<Character> characters_of(const FinAbGroup& G) {
    if (G.order() > 10000) throw SizeLimit("character enumeration capped at order 10^4");
    std::vector<Character> out;
    out.reserve(G.order());
    std::vector<long> e(G.rank(), 0);
    const auto& d = G.invariant_factors();
    for (;;) {
        out.emplace_back(G, e);
        long i = static_cast<long>(e.size()) - 1;
        for (; i >= 0; --i) {
            if (++e[i] < d[i]) break;
            e[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

std::vector<GroupElement> elements_of(const FinAbGroup& G) {
    if (G.order() > 10000) throw SizeLimit("element enumeration capped at order 10^4");
    std::vector<GroupElement> out;
    out.reserve(G.order());
    std::vector<long> e(G.rank(), 0);
    const auto& d = G.invariant_factors();
    for (;;) {
        out.emplace_back(G, e);
        long i = static_cast<long>(e.size()) - 1;
        for (; i >= 0; --i) {
            if (++e[i] < d[i]) break;
            e[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

CharFn::CharFn(FinAbGroup g, std::vector<CycloNumber> values)
    : group_(std::move(g)), values_(std::move(values)) {
    if (static_cast<long>(values_.size()) != group_.order())
        throw BadDescriptor("CharFn needs one value per character");
    for (const auto& v : values_)
        if (v.is_zero()) throw BadDescriptor("CharFn values must be nonzero");
}

CharFn CharFn::constant_one(const FinAbGroup& g) {
    return CharFn(g, std::vector<CycloNumber>(g.order(), CycloNumber(Rational(1))));
}

const CycloNumber& CharFn::at(const Character& chi) const {
    if (chi.group != group_) throw GroupMismatch("CharFn evaluation");
    return values_[enum_index(group_, chi.exponents)];
}

CharFn CharFn::pointwise_mul(const CharFn& o) const {
    if (group_ != o.group_) throw GroupMismatch("CharFn product");
    std::vector<CycloNumber> v(values_.size());
    for (size_t i = 0; i < values_.size(); ++i) v[i] = values_[i] * o.values_[i];
    return CharFn(group_, std::move(v));
}

CharFn CharFn::pointwise_inverse() const {
    std::vector<CycloNumber> v(values_.size());
    for (size_t i = 0; i < values_.size(); ++i) v[i] = values_[i].inverse();
    return CharFn(group_, std::move(v));
}

long CharFn::ambient_level() const {
    long L = 1;
    for (const auto& v : values_) L = lcm_ll(L, v.level());
    return L;
}

bool CharFn::operator==(const CharFn& o) const {
    if (group_ != o.group_) return false;
    for (size_t i = 0; i < values_.size(); ++i)
        if (values_[i] != o.values_[i]) return false;
    return true;
}

bool charfn_check_equivariance(const CharFn& f, long level) {
    auto chars = characters_of(f.group());
    // lift once so Galois action at the ambient level is defined
    std::vector<CycloNumber> lifted;
    lifted.reserve(chars.size());
    for (const auto& v : f.values()) lifted.push_back(v.at_level(level));

    UnitGroup units(level);
    for (long k : units.generators()) {
        for (size_t i = 0; i < chars.size(); ++i) {
            // chi -> chi^k on dual coordinates
            std::vector<long> e(chars[i].exponents);
            for (auto& x : e) x *= k;
            Character chik(f.group(), std::move(e));
            size_t j = enum_index(f.group(), chik.exponents);
            if (lifted[j] != lifted[i].galois_apply(k)) return false;
        }
    }
    return true;
}

GroupElement UnitQuotient::project(long unit) const {
    auto it = proj_table.find(units->normalize(unit));
    if (it == proj_table.end())
        throw BadDescriptor("projection of non-unit " + std::to_string(unit));
    return GroupElement(group, it->second);
}

long UnitQuotient::section(const GroupElement& g) const {
    auto it = rep_table.find(g.exponents);
    if (it == rep_table.end()) throw BadDescriptor("section of unknown element");
    return it->second;
}

UnitQuotient make_unit_quotient(long modulus, const std::vector<long>& subgroup_gens) {
    UnitQuotient out;
    out.units = std::make_shared<UnitGroup>(modulus);
    out.subgroup = out.units->subgroup_closure(subgroup_gens);

    const auto& gens = out.units->generators();
    const auto& orders = out.units->component_orders();
    size_t s = gens.size();

    // relation lattice: generator orders and the subgroup's dlog images
    IntegerMatrix M(s, s + out.subgroup.size());
    for (size_t i = 0; i < s; ++i) M.at(i, i) = orders[i];
    for (size_t j = 0; j < out.subgroup.size(); ++j) {
        auto dl = out.units->dlog(out.subgroup[j]);
        for (size_t i = 0; i < s; ++i) M.at(i, s + j) = dl[i];
    }
    SNFResult res = snf(M);

    // quotient Z^s / col(M) = sum Z/D_ii via x -> U x
    std::vector<long> inv;
    std::vector<size_t> keep;
    for (size_t i = 0; i < s; ++i) {
        long di = checked_long(res.D.at(i, i), "invariant factor");
        if (di == 0) throw BadDescriptor("quotient is infinite (bad relation lattice)");
        if (di >= 2) {
            inv.push_back(di);
            keep.push_back(i);
        }
    }
    out.group = FinAbGroup(inv);

    for (long u : out.units->units()) {
        auto dl = out.units->dlog(u);
        std::vector<long> y(inv.size(), 0);
        for (size_t r = 0; r < keep.size(); ++r) {
            Integer acc = 0;
            for (size_t i = 0; i < s; ++i) acc += res.U.at(keep[r], i) * dl[i];
            Integer m = acc % inv[r];
            if (m < 0) m += inv[r];
            y[r] = m.get_si();
        }
        out.proj_table.emplace(u, y);
        auto it = out.rep_table.find(y);
        if (it == out.rep_table.end() || u < it->second) out.rep_table[y] = u;
    }

    long expected = out.units->order() / static_cast<long>(out.subgroup.size());
    if (out.group.order() != expected)
        throw BadDescriptor("quotient order mismatch in unit quotient");
    return out;
}

}  // namespace galmod
