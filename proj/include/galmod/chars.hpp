#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "galmod/cyclo.hpp"
#include "galmod/unitgroup.hpp"

namespace galmod {

// Finite abelian group in invariant-factor form d1 | d2 | ... | dr with
// every di >= 2; the empty sequence is the trivial group.
class FinAbGroup {
public:
    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<long> invariant_factors);

    const std::vector<long>& invariant_factors() const { return d_; }
    long order() const;
    long exponent() const;  // 1 for the trivial group
    size_t rank() const { return d_.size(); }

    bool operator==(const FinAbGroup& o) const = default;

private:
    std::vector<long> d_;
};

// Element in canonical coordinates: exponents reduced mod the invariant
// factors componentwise.
struct GroupElement {
    FinAbGroup group;
    std::vector<long> exponents;

    GroupElement() = default;
    GroupElement(FinAbGroup g, std::vector<long> e);

    static GroupElement identity(const FinAbGroup& g);
    GroupElement mul(const GroupElement& o) const;
    GroupElement inverse() const;
    GroupElement pow(long k) const;
    bool is_identity() const;
    long order() const;

    bool operator==(const GroupElement& o) const = default;
    bool operator<(const GroupElement& o) const { return exponents < o.exponents; }
};

// Character in dual coordinates; the value on (x_i) is the exponent
// sum(e_i x_i E/d_i) mod E power of zeta_E, E the group exponent.
struct Character {
    FinAbGroup group;
    std::vector<long> exponents;

    Character() = default;
    Character(FinAbGroup g, std::vector<long> e);

    static Character trivial(const FinAbGroup& g);
    bool is_trivial() const;
    long order() const;

    long value_exponent(const GroupElement& g) const;  // in Z/E
    CycloNumber eval(const GroupElement& g) const;

    Character mul(const Character& o) const;
    Character conj() const;
    Character galois(long k) const;  // chi -> chi^k, gcd(k, exponent) = 1

    bool operator==(const Character& o) const = default;
    bool operator<(const Character& o) const { return exponents < o.exponents; }
};

// All |G| characters, trivial first, in a fixed enumeration order.
std::vector<Character> characters_of(const FinAbGroup& G);

// All |G| elements in the matching enumeration order (identity first).
std::vector<GroupElement> elements_of(const FinAbGroup& G);

// A character-indexed function with nonzero cyclotomic values; houses the
// Hom(R_Gamma, -) objects.  Values are stored in characters_of order.
class CharFn {
public:
    CharFn() = default;
    CharFn(FinAbGroup g, std::vector<CycloNumber> values_in_enum_order);

    static CharFn constant_one(const FinAbGroup& g);

    const FinAbGroup& group() const { return group_; }
    const std::vector<CycloNumber>& values() const { return values_; }
    const CycloNumber& at(const Character& chi) const;

    CharFn pointwise_mul(const CharFn& o) const;
    CharFn pointwise_inverse() const;

    // lcm of the levels of all values
    long ambient_level() const;

    bool operator==(const CharFn& o) const;

private:
    FinAbGroup group_;
    std::vector<CycloNumber> values_;
};

// Omega-equivariance: f(chi^k) = sigma_k(f(chi)) for every chi and every
// k coprime to the given cyclotomic level.
bool charfn_check_equivariance(const CharFn& f, long level);

// Quotient of (Z/m)^x by a subgroup, with explicit maps in both
// directions.  This realizes Galois groups of abelian fields and the
// duals used throughout.
struct UnitQuotient {
    std::shared_ptr<UnitGroup> units;
    std::vector<long> subgroup;  // sorted
    FinAbGroup group;

    GroupElement project(long unit) const;
    long section(const GroupElement& g) const;  // canonical smallest unit rep

    // internal: per-unit projection table and per-element representative
    std::map<long, std::vector<long>> proj_table;
    std::map<std::vector<long>, long> rep_table;
};

UnitQuotient make_unit_quotient(long modulus, const std::vector<long>& subgroup_gens);

}  // namespace galmod
