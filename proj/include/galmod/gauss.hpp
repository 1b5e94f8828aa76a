#pragma once

#include <map>
#include <string>
#include <vector>

#include "galmod/chars.hpp"
#include "galmod/cyclo.hpp"
#include "galmod/fields.hpp"

namespace galmod {

// Dirichlet character stored by its value-exponent table: chi(u) =
// zeta_order^{table[u]} on units, 0 off units.
class DirichletCharacter {
public:
    DirichletCharacter() = default;

    long modulus() const { return modulus_; }
    long order() const { return order_; }
    long conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == modulus_; }
    bool is_trivial() const { return order_ == 1; }

    // exponent of chi(u) as a power of zeta_order; throws on non-units
    long exponent_at(long a) const;
    CycloNumber value(long a) const;  // 0 by convention when gcd(a, m) > 1
    long parity() const;              // chi(-1) as +1 / -1

    DirichletCharacter primitive_part() const;
    DirichletCharacter conj() const;
    DirichletCharacter mul(const DirichletCharacter& o) const;  // at lcm modulus

    bool operator==(const DirichletCharacter& o) const;

    friend DirichletCharacter make_dirichlet(long modulus,
                                             const std::vector<long>& dual_exponents);
    friend DirichletCharacter dirichlet_from_field_character(const AbelianField& L,
                                                             const Character& chi);

private:
    void finish(long modulus, long value_exponent_modulus, std::map<long, long> raw);

    long modulus_ = 1;
    long order_ = 1;
    long conductor_ = 1;
    std::map<long, long> table_;  // unit -> exponent in Z/order
};

// Character of (Z/m)^x from dual coordinates of the invariant-factor
// presentation of the unit group.
DirichletCharacter make_dirichlet(long modulus, const std::vector<long>& dual_exponents);

// The Dirichlet character mod cond(L) attached to a Galois character.
DirichletCharacter dirichlet_from_field_character(const AbelianField& L,
                                                  const Character& chi);

// All characters of (Z/f)^x with conductor exactly f, in enumeration order.
std::vector<DirichletCharacter> primitive_characters_mod(long f);

// tau(chi) = sum_a chi(a) zeta_f^a for primitive chi, exact at level
// lcm(f, order).  Throws NotPrimitive otherwise.
CycloNumber gauss_sum(const DirichletCharacter& chi);

// i^{-(degree - trace)/2}, the archimedean factor at the real place of Q.
CycloNumber w_infinity(long degree, long trace_at_conjugation);

// tau(chi) * w_infinity(conj chi) (|d_Q| = 1).
CycloNumber epsilon_constant(const DirichletCharacter& chi);

// Root-of-unity finite correction: 1 when p does not divide the
// conductor, else the prime-to-p part of chi evaluated at p.
CycloNumber unramified_characteristic(const DirichletCharacter& chi, long p);

// User-supplied (possibly nonabelian) character table data.
struct CharTable {
    std::string name;
    std::vector<long> class_sizes;
    std::vector<long> degrees;
    std::vector<long> power_map_2;                 // class index of squares
    std::vector<std::vector<CycloNumber>> values;  // rows = irreducibles

    long group_order() const;
    void validate() const;  // throws BadTable on inconsistency
};

// Frobenius-Schur indicators; rows with indicator -1.
std::vector<long> frobenius_schur_indicators(const CharTable& T);
std::vector<size_t> symplectic_characters(const CharTable& T);

// Ramification data supplied alongside a character table: residue degree
// and the inertia-fixed dimension of every irreducible, per place above p.
struct SupplementedRamData {
    struct Place {
        long residue_degree;
        std::vector<long> invariant_dims;
    };
    std::vector<Place> places;
};

// prod over places of (-p)^{(1/2) f (deg - dim V^I)} as an exact rational.
CycloNumber pfaffian(const CharTable& T, const SupplementedRamData& ram,
                     size_t char_index, long p);

}  // namespace galmod
