#include "galmod/resolvends.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "galmod/errors.hpp"

namespace galmod {

namespace {

long enum_index_of(const FinAbGroup& g, const std::vector<long>& e) {
    long idx = 0;
    const auto& d = g.invariant_factors();
    for (size_t i = 0; i < d.size(); ++i) idx = idx * d[i] + e[i];
    return idx;
}

// value-based total order used by the reduced-resolvend normal form
int cyclo_cmp(const CycloNumber& a, const CycloNumber& b) {
    long L = lcm_ll(a.level(), b.level());
    CycloNumber x = a.at_level(L), y = b.at_level(L);
    for (size_t i = 0; i < x.coeffs().size(); ++i) {
        int c = cmp(x.coeffs()[i], y.coeffs()[i]);
        if (c != 0) return c;
    }
    return 0;
}

int coeff_vector_cmp(const std::vector<CycloNumber>& a, const std::vector<CycloNumber>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cyclo_cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(FinAbGroup g, std::vector<CycloNumber> coeffs)
    : group_(std::move(g)), coeffs_(std::move(coeffs)) {
    if (static_cast<long>(coeffs_.size()) != group_.order())
        throw BadDescriptor("group algebra element needs one coefficient per element");
}

GroupAlgebraElement GroupAlgebraElement::zero(const FinAbGroup& g) {
    return GroupAlgebraElement(g, std::vector<CycloNumber>(g.order(), CycloNumber()));
}

GroupAlgebraElement GroupAlgebraElement::one(const FinAbGroup& g) {
    auto x = zero(g);
    x.coeffs_[0] = CycloNumber(Rational(1));
    return x;
}

GroupAlgebraElement GroupAlgebraElement::of_element(const GroupElement& gamma) {
    auto x = zero(gamma.group);
    x.coeffs_[enum_index_of(gamma.group, gamma.exponents)] = CycloNumber(Rational(1));
    return x;
}

GroupAlgebraElement GroupAlgebraElement::of_scalar(const FinAbGroup& g,
                                                   const CycloNumber& c) {
    auto x = zero(g);
    x.coeffs_[0] = c;
    return x;
}

const CycloNumber& GroupAlgebraElement::coeff(const GroupElement& gamma) const {
    if (gamma.group != group_) throw GroupMismatch("coefficient lookup");
    return coeffs_[enum_index_of(group_, gamma.exponents)];
}

long GroupAlgebraElement::ambient_level() const {
    long L = group_.exponent();
    for (const auto& c : coeffs_) L = lcm_ll(L, c.level());
    return L;
}

GroupAlgebraElement GroupAlgebraElement::add(const GroupAlgebraElement& o) const {
    if (group_ != o.group_) throw GroupMismatch("group algebra addition");
    std::vector<CycloNumber> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] + o.coeffs_[i];
    return GroupAlgebraElement(group_, std::move(out));
}

GroupAlgebraElement GroupAlgebraElement::sub(const GroupAlgebraElement& o) const {
    if (group_ != o.group_) throw GroupMismatch("group algebra subtraction");
    std::vector<CycloNumber> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] - o.coeffs_[i];
    return GroupAlgebraElement(group_, std::move(out));
}

GroupAlgebraElement GroupAlgebraElement::mul(const GroupAlgebraElement& o) const {
    if (group_ != o.group_) throw GroupMismatch("group algebra multiplication");
    auto elems = elements_of(group_);
    std::vector<CycloNumber> out(coeffs_.size());
    for (size_t i = 0; i < elems.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < elems.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            long k = enum_index_of(group_, elems[i].mul(elems[j]).exponents);
            out[k] = out[k] + coeffs_[i] * o.coeffs_[j];
        }
    }
    return GroupAlgebraElement(group_, std::move(out));
}

CycloNumber GroupAlgebraElement::transform(const Character& chi) const {
    if (chi.group != group_) throw GroupMismatch("character transform");
    auto elems = elements_of(group_);
    long E = group_.exponent();
    CycloNumber acc;
    for (size_t i = 0; i < elems.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        acc = acc + coeffs_[i] * CycloNumber::root_of_unity(E, chi.value_exponent(elems[i]));
    }
    return acc;
}

std::vector<CycloNumber> GroupAlgebraElement::transform_all() const {
    std::vector<CycloNumber> out;
    auto chars = characters_of(group_);
    out.reserve(chars.size());
    for (const auto& chi : chars) out.push_back(transform(chi));
    return out;
}

bool GroupAlgebraElement::is_invertible() const {
    for (const auto& t : transform_all())
        if (t.is_zero()) return false;
    return true;
}

GroupAlgebraElement GroupAlgebraElement::inverse() const {
    auto chars = characters_of(group_);
    auto ts = transform_all();
    for (size_t i = 0; i < ts.size(); ++i) {
        if (ts[i].is_zero()) {
            std::string witness;
            for (long e : chars[i].exponents) witness += std::to_string(e) + ",";
            throw NonInvertible("vanishing character transform at chi=(" + witness + ")");
        }
    }
    // inverse Fourier of the pointwise inverses
    auto elems = elements_of(group_);
    long n = group_.order();
    long E = group_.exponent();
    std::vector<CycloNumber> out(n);
    for (size_t g = 0; g < elems.size(); ++g) {
        CycloNumber acc;
        for (size_t c = 0; c < chars.size(); ++c) {
            long e = chars[c].value_exponent(elems[g].inverse());
            acc = acc + ts[c].inverse() * CycloNumber::root_of_unity(E, e);
        }
        out[g] = acc.scaled(Rational(1, n));
    }
    return GroupAlgebraElement(group_, std::move(out));
}

GroupAlgebraElement GroupAlgebraElement::galois_apply(long k) const {
    std::vector<CycloNumber> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i].galois_apply(k);
    return GroupAlgebraElement(group_, std::move(out));
}

GroupAlgebraElement GroupAlgebraElement::translate(const GroupElement& gamma) const {
    if (gamma.group != group_) throw GroupMismatch("translation");
    auto elems = elements_of(group_);
    std::vector<CycloNumber> out(coeffs_.size());
    for (size_t i = 0; i < elems.size(); ++i) {
        long j = enum_index_of(group_, gamma.mul(elems[i]).exponents);
        out[j] = coeffs_[i];
    }
    return GroupAlgebraElement(group_, std::move(out));
}

std::optional<GroupElement> GroupAlgebraElement::as_grouplike() const {
    auto elems = elements_of(group_);
    std::optional<GroupElement> found;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (found) return std::nullopt;
        if (coeffs_[i] != CycloNumber(Rational(1))) return std::nullopt;
        found = elems[i];
    }
    return found;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
    if (group_ != o.group_) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

CharFn det_of(const GroupAlgebraElement& a) {
    auto ts = a.transform_all();
    for (const auto& t : ts)
        if (t.is_zero()) throw Singular("local datum has a vanishing transform");
    return CharFn(a.group(), std::move(ts));
}

ReducedResolvend reduce_resolvend(const GroupAlgebraElement& a) {
    auto elems = elements_of(a.group());
    std::optional<GroupAlgebraElement> best;
    for (const auto& gamma : elems) {
        GroupAlgebraElement cand = a.translate(gamma);
        if (cand.coeffs()[0].is_zero()) continue;  // identity coefficient must be nonzero
        if (!best || coeff_vector_cmp(cand.coeffs(), best->coeffs()) < 0) best = cand;
    }
    if (!best)
        throw BadDescriptor("zero element has no reduced representative");
    return ReducedResolvend{*best, true};
}

GroupElement TorsorDescriptor::apply_hom(long unit) const {
    long u = ((unit % level) + level) % level;
    auto it = hom.find(u);
    if (it == hom.end())
        throw BadDescriptor("torsor hom undefined at " + std::to_string(unit));
    return it->second;
}

TorsorDescriptor make_torsor(const FinAbGroup& gamma, long level,
                             const std::vector<std::pair<long, std::vector<long>>>& pairs) {
    UnitGroup units(level);
    // close the graph subgroup generated by the pairs
    std::map<long, GroupElement> graph;
    graph.emplace(1 % level, GroupElement::identity(gamma));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<long, GroupElement>> cur(graph.begin(), graph.end());
        for (const auto& [u, g] : cur) {
            for (const auto& [pu, pe] : pairs) {
                if (std::gcd(((pu % level) + level) % level, level) != 1)
                    throw BadDescriptor("torsor hom argument not coprime to the level");
                long nu = mul_mod(u, pu, level);
                GroupElement ng = g.mul(GroupElement(gamma, pe));
                auto it = graph.find(nu);
                if (it == graph.end()) {
                    graph.emplace(nu, ng);
                    grew = true;
                } else if (!(it->second == ng)) {
                    throw BadDescriptor("torsor pairs do not define a homomorphism");
                }
            }
        }
    }
    if (static_cast<long>(graph.size()) != units.order())
        throw BadDescriptor("torsor hom must be defined on all of (Z/f)^x");
    TorsorDescriptor T;
    T.gamma = gamma;
    T.level = level;
    T.hom = std::move(graph);
    return T;
}

TorsorDescriptor torsor_product(const TorsorDescriptor& a, const TorsorDescriptor& b) {
    if (a.gamma != b.gamma) throw GroupMismatch("torsor product");
    long L = lcm_ll(a.level, b.level);
    UnitGroup units(L);
    TorsorDescriptor T;
    T.gamma = a.gamma;
    T.level = L;
    for (long u : units.units()) {
        long uu = (L == 1) ? 1 : u;
        T.hom.emplace(u, a.apply_hom(uu).mul(b.apply_hom(uu)));
    }
    return T;
}

GroupAlgebraElement resolvend_of_torsor_rotated(const TorsorDescriptor& T,
                                                const GroupElement& coset) {
    if (!is_squarefree(T.level))
        throw WildRamification("torsor level " + std::to_string(T.level) +
                               " is not squarefree");
    // kernel of hom and its fixed field
    std::vector<long> ker;
    UnitGroup units(T.level);
    for (long u : units.units())
        if (T.apply_hom(u == 0 ? 1 : u).is_identity()) ker.push_back(u == 0 ? 1 : u);
    AbelianField Lprime = build_field(T.level, ker);
    CycloNumber alpha = Lprime.nib_generator();

    // image subgroup G' of Gamma with a section through the hom
    std::map<std::vector<long>, long> image_rep;  // gamma exponents -> unit
    for (long u : units.units()) {
        long uu = (T.level == 1) ? 1 : u;
        auto g = T.apply_hom(uu);
        if (!image_rep.count(g.exponents)) image_rep[g.exponents] = uu;
    }

    auto elems = elements_of(T.gamma);
    std::vector<CycloNumber> coeffs(T.gamma.order());
    for (size_t i = 0; i < elems.size(); ++i) {
        // support on coset * G'; coefficient at coset*gamma is gamma^{-1}(alpha')
        GroupElement shifted = coset.inverse().mul(elems[i]);
        auto it = image_rep.find(shifted.inverse().exponents);
        if (it == image_rep.end()) continue;
        // act by hom^{-1}(shifted^{-1}) through the field presentation
        GroupElement galois_elt = Lprime.quotient().project(
            Lprime.conductor() == 1 ? 0 : it->second % Lprime.conductor());
        coeffs[i] = Lprime.apply(galois_elt, alpha);
    }
    GroupAlgebraElement r(T.gamma, std::move(coeffs));
    if (!r.is_invertible())
        throw BadDescriptor("torsor resolvend is not invertible");
    return r;
}

GroupAlgebraElement resolvend_of_torsor(const TorsorDescriptor& T) {
    return resolvend_of_torsor_rotated(T, GroupElement::identity(T.gamma));
}

HMembership h_membership(const GroupAlgebraElement& a) {
    GroupAlgebraElement inv = a.inverse();  // NonInvertible if not a unit
    long N = a.ambient_level();
    HMembership out;
    out.member = true;
    UnitGroup units(N);
    for (long k : units.units()) {
        long kk = (N == 1) ? 1 : k;
        GroupAlgebraElement q = a.galois_apply(kk).mul(inv);
        auto gl = q.as_grouplike();
        if (!gl) {
            out.member = false;
            out.cocycle.clear();
            return out;
        }
        out.cocycle.emplace(k, *gl);
    }
    return out;
}

FinAbGroup square_group(const FinAbGroup& g) {
    std::vector<long> inv;
    for (long d : g.invariant_factors()) {
        inv.push_back(d);
        inv.push_back(d);
    }
    return FinAbGroup(inv);
}

GroupElement square_element(const GroupElement& a, const GroupElement& b) {
    if (a.group != b.group) throw GroupMismatch("square element");
    std::vector<long> e;
    for (size_t i = 0; i < a.exponents.size(); ++i) {
        e.push_back(a.exponents[i]);
        e.push_back(b.exponents[i]);
    }
    return GroupElement(square_group(a.group), e);
}

bool primitivity_test(const GroupAlgebraElement& a) {
    if (!a.is_invertible()) throw NonInvertible("primitivity test needs a unit");
    FinAbGroup G2 = square_group(a.group());
    auto elems = elements_of(a.group());

    // Delta(a), i1(a), i2(a) in the Gamma x Gamma algebra
    auto delta = GroupAlgebraElement::zero(G2);
    auto i1 = GroupAlgebraElement::zero(G2);
    auto i2 = GroupAlgebraElement::zero(G2);
    {
        std::vector<CycloNumber> cd(G2.order()), c1(G2.order()), c2(G2.order());
        auto id = GroupElement::identity(a.group());
        for (size_t i = 0; i < elems.size(); ++i) {
            if (a.coeffs()[i].is_zero()) continue;
            cd[enum_index_of(G2, square_element(elems[i], elems[i]).exponents)] =
                a.coeffs()[i];
            c1[enum_index_of(G2, square_element(elems[i], id).exponents)] = a.coeffs()[i];
            c2[enum_index_of(G2, square_element(id, elems[i]).exponents)] = a.coeffs()[i];
        }
        delta = GroupAlgebraElement(G2, std::move(cd));
        i1 = GroupAlgebraElement(G2, std::move(c1));
        i2 = GroupAlgebraElement(G2, std::move(c2));
    }
    GroupAlgebraElement u = delta.mul(i1.mul(i2).inverse());

    // scan translates (g, h) for a Galois-fixed (rational) twist
    auto elems2 = elements_of(G2);
    for (const auto& gh : elems2) {
        GroupAlgebraElement v = u.translate(gh.inverse());
        bool rational = true;
        for (const auto& c : v.coeffs()) {
            if (!c.is_rational()) {
                rational = false;
                break;
            }
        }
        if (rational) return true;
    }
    return false;
}

}  // namespace galmod
