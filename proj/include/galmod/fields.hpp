#pragma once

#include <optional>
#include <vector>

#include "galmod/chars.hpp"
#include "galmod/cyclo.hpp"

namespace galmod {

// Ramification data of a rational prime in an abelian field.
struct RamificationDatum {
    long prime;
    long e;       // ramification index
    long f_deg;   // residue degree
    long g;       // number of primes above
    std::vector<GroupElement> inertia;  // sorted by exponent vector
    GroupElement frobenius_class;       // canonical coset lift mod inertia
};

// Abelian number field presented by conductor and kernel subgroup of
// (Z/f)^x (Kronecker-Weber).  The stored conductor is always the true
// one; construction re-presents as needed.
class AbelianField {
public:
    long conductor() const { return conductor_; }
    const std::vector<long>& kernel() const { return quotient_.subgroup; }
    long degree() const { return quotient_.group.order(); }
    const FinAbGroup& galois_group() const { return quotient_.group; }
    const UnitQuotient& quotient() const { return quotient_; }

    bool tame() const;  // squarefree conductor

    // Galois action through the canonical coset representative.
    CycloNumber apply(const GroupElement& g, const CycloNumber& x) const;
    Rational trace(const CycloNumber& x) const;
    bool contains(const CycloNumber& x) const;  // fixed by the kernel

    // Hilbert-Speiser generator Tr_{Q(zeta_f)/L}(zeta_f); verified to give
    // a normal integral basis.  Throws WildRamification unless tame.
    CycloNumber nib_generator() const;

    RamificationDatum ramification_data(long p) const;
    Integer discriminant() const;  // |d_L| by conductor-discriminant

    // Dirichlet conductor of a character of the Galois group.
    long character_conductor(const Character& chi) const;

    std::vector<GroupElement> group_elements() const { return elements_of(galois_group()); }
    std::vector<Character> characters() const { return characters_of(galois_group()); }

    friend AbelianField build_field(long f, const std::vector<long>& kernel_generators);

private:
    long conductor_ = 1;
    UnitQuotient quotient_;
};

AbelianField build_field(long f, const std::vector<long>& kernel_generators);

// All tame abelian fields with the exact conductor bounded as given and
// degree within the bound, sorted by (conductor, kernel).
std::vector<AbelianField> enumerate_tame_fields(long max_conductor, long max_degree);

// Lagrange resolvent (alpha | chi) = sum_g g(alpha) chi(g)^{-1}.
CycloNumber lagrange_resolvent(const AbelianField& L, const CycloNumber& alpha,
                               const Character& chi);

}  // namespace galmod
