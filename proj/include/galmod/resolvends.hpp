#pragma once

#include <map>
#include <optional>
#include <vector>

#include "galmod/chars.hpp"
#include "galmod/fields.hpp"

namespace galmod {

// Element of Q(zeta_N)[Gamma] with coefficients indexed in elements_of
// order.  Coefficients may sit at mixed cyclotomic levels; operations
// lift as needed.
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;
    GroupAlgebraElement(FinAbGroup g, std::vector<CycloNumber> coeffs);

    static GroupAlgebraElement zero(const FinAbGroup& g);
    static GroupAlgebraElement one(const FinAbGroup& g);
    static GroupAlgebraElement of_element(const GroupElement& gamma);
    static GroupAlgebraElement of_scalar(const FinAbGroup& g, const CycloNumber& c);

    const FinAbGroup& group() const { return group_; }
    const std::vector<CycloNumber>& coeffs() const { return coeffs_; }
    const CycloNumber& coeff(const GroupElement& gamma) const;

    // lcm of coefficient levels and the exponent of Gamma
    long ambient_level() const;

    GroupAlgebraElement add(const GroupAlgebraElement& o) const;
    GroupAlgebraElement sub(const GroupAlgebraElement& o) const;
    GroupAlgebraElement mul(const GroupAlgebraElement& o) const;
    GroupAlgebraElement inverse() const;  // NonInvertible carries a witness character
    GroupAlgebraElement galois_apply(long k) const;  // on coefficients
    GroupAlgebraElement translate(const GroupElement& gamma) const;  // gamma * this

    // algebra map to Q(zeta)^Gamma-hat: chi |-> sum c_gamma chi(gamma)
    CycloNumber transform(const Character& chi) const;
    std::vector<CycloNumber> transform_all() const;  // characters_of order
    bool is_invertible() const;

    // exactly one nonzero coefficient equal to 1
    std::optional<GroupElement> as_grouplike() const;

    bool operator==(const GroupAlgebraElement& o) const;

private:
    FinAbGroup group_;
    std::vector<CycloNumber> coeffs_;
};

// Det through the character transform; throws Singular on a vanishing
// transform (with the witness in the message).
CharFn det_of(const GroupAlgebraElement& a);

// Canonical representative of the class modulo translation by Gamma:
// among translates with nonzero identity coefficient, the one with the
// lexicographically least coefficient vector (ties by element order).
struct ReducedResolvend {
    GroupAlgebraElement element;
    bool normalized = false;
};

ReducedResolvend reduce_resolvend(const GroupAlgebraElement& a);

// Tame torsor of the constant group Gamma over Q at finite level f: a
// homomorphism (Z/f)^x -> Gamma recorded on every unit.
struct TorsorDescriptor {
    FinAbGroup gamma;
    long level = 1;
    std::map<long, GroupElement> hom;  // defined on all units mod level

    GroupElement apply_hom(long unit) const;
};

// Build from generator pairs (unit, image); validates that the pairs
// extend to a homomorphism defined on the whole unit group.
TorsorDescriptor make_torsor(const FinAbGroup& gamma, long level,
                             const std::vector<std::pair<long, std::vector<long>>>& pairs);

// Product torsor (pointwise product of homomorphisms at the lcm level).
TorsorDescriptor torsor_product(const TorsorDescriptor& a, const TorsorDescriptor& b);

// The resolvend of the canonical algebra generator of the torsor: the
// field resolvend of the fixed field of ker(hom), embedded along the
// image subgroup, supported on a chosen coset (identity by default).
GroupAlgebraElement resolvend_of_torsor(const TorsorDescriptor& T);
GroupAlgebraElement resolvend_of_torsor_rotated(const TorsorDescriptor& T,
                                                const GroupElement& coset);

// alpha^omega = g_omega alpha for every omega in the Galois group of the
// ambient cyclotomic level; on success returns the cocycle k -> g_k.
struct HMembership {
    bool member = false;
    std::map<long, GroupElement> cocycle;  // per unit k of the ambient level
};

HMembership h_membership(const GroupAlgebraElement& a);

// Comultiplicative characterization: some (g, h) twist of
// Delta(a) (i1(a) i2(a))^{-1} is Galois-fixed.  Exhaustive scan over
// Gamma^2.
bool primitivity_test(const GroupAlgebraElement& a);

// product group Gamma x Gamma with interleaved coordinates, plus the
// embedding of a coordinate pair
FinAbGroup square_group(const FinAbGroup& g);
GroupElement square_element(const GroupElement& a, const GroupElement& b);

}  // namespace galmod
