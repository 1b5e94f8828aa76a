#pragma once

#include <map>
#include <vector>

#include "galmod/fields.hpp"
#include "galmod/intmat.hpp"

namespace galmod {

// Smith-normal-form data of the cokernel of psi_{L/Q}.
struct TorsionModule {
    std::vector<Integer> invariant_factors;  // full diagonal, ones included
    Integer order;
    std::map<long, Integer> per_prime_orders;  // p -> p-part of the order
};

// Matrix of psi(l1 tensor l2)(g) = g(l1) l2 over Z in the bases
// {g_i(alpha) tensor g_j(alpha)} and {delta_g g_j(alpha)}; n^2 x n^2.
IntegerMatrix chase_matrix(const AbelianField& L);

TorsionModule chase_cokernel(const AbelianField& L);

// Order-level consistency of the cokernel against the equivariant
// discriminant class: per ramified prime p,
//   v_p(|Cok psi|)  ==  n * sum_chi tv_p(resolvent(chi)).
struct ChtReport {
    struct PerPrime {
        long p;
        Integer lhs;   // v_p of the cokernel order
        Rational rhs;  // n * sum of normalized total valuations
        bool equal;
    };
    std::vector<PerPrime> primes;
    bool ok = true;
};

ChtReport cht_check(const AbelianField& L);

}  // namespace galmod
