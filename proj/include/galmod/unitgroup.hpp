#pragma once

#include <map>
#include <vector>

#include "galmod/numtheory.hpp"

namespace galmod {

// Structure of (Z/m)^x: a fixed generating set with cyclic component
// orders (CRT decomposition) and discrete logarithms with respect to it.
// This is the bridge between modular arithmetic and abstract abelian
// group data used by the field, character, and torsor modules.
class UnitGroup {
public:
    explicit UnitGroup(long modulus);

    long modulus() const { return m_; }
    long order() const { return order_; }
    const std::vector<long>& generators() const { return gens_; }
    const std::vector<long>& component_orders() const { return orders_; }

    bool is_unit(long a) const;
    long normalize(long a) const;  // representative in [0, m)

    // exponent vector of a unit with respect to generators()
    std::vector<long> dlog(long a) const;
    long from_exponents(const std::vector<long>& e) const;

    const std::vector<long>& units() const { return units_; }  // sorted

    // subgroup generated by the given units, as a sorted vector
    std::vector<long> subgroup_closure(std::vector<long> gens) const;

private:
    long m_;
    long order_;
    std::vector<long> gens_;
    std::vector<long> orders_;
    std::vector<long> units_;
    std::map<long, std::vector<long>> dlog_table_;
};

}  // namespace galmod
