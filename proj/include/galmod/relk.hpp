#pragma once

#include <map>
#include <vector>

#include "galmod/bigfloat.hpp"
#include "galmod/chars.hpp"
#include "galmod/fields.hpp"
#include "galmod/gauss.hpp"
#include "galmod/resolvends.hpp"

namespace galmod {

// Finitely supported idelic character function; the implicit value away
// from the support is the constant function 1.  Every stored CharFn must
// be Omega-equivariant.
struct IdelicCharFn {
    FinAbGroup group;
    std::map<long, CharFn> local;

    void validate() const;  // throws BadDescriptor on a non-equivariant entry
};

// Representative of a class in K_0(Z[G], E): a finite idelic component
// plus a global character function with nonzero values.  Class equality
// is exposed only through the decidable projections below (total
// valuations and archimedean absolute values) together with difference
// reporting; full coset equality needs global unit data this library
// does not compute.
class RelKRep {
public:
    RelKRep() = default;
    RelKRep(IdelicCharFn finite, CharFn global, bool kbar_normalized = false);

    static RelKRep zero(const FinAbGroup& G);

    const FinAbGroup& group() const { return finite_.group; }
    const IdelicCharFn& finite() const { return finite_; }
    const CharFn& global() const { return global_; }
    bool kbar_normalized() const { return kbar_normalized_; }

    // declared ambient cyclotomic level: lcm of every value level and the
    // group exponent
    long ambient_level() const;

    RelKRep add(const RelKRep& o) const;
    RelKRep neg() const;
    RelKRep diff(const RelKRep& o) const { return add(o.neg()); }

private:
    IdelicCharFn finite_;
    CharFn global_;
    bool kbar_normalized_ = false;
};

// Rank-one generalised twisted form data: local comparison determinants
// at finitely many primes plus the Det of the global comparison
// isomorphism.
struct TwistedFormData {
    FinAbGroup group;
    long rank = 1;
    std::map<long, CharFn> local_dets;
    CharFn global_iso;
};

RelKRep class_of_twisted_form(const TwistedFormData& T);

// [O_L, H tensor Z; pi] with the Hilbert-Speiser generator at every
// finite place: finite component 1, global component the resolvents.
RelKRep delta_rep_of_field(const AbelianField& L);

// Analytic-side representative: unramified characteristics at the finite
// places, Galois-Gauss sums globally (lambda = 1, |d_Q| = 1).
RelKRep gauss_rep_of_field(const AbelianField& L);

// Degree-normalized total valuation above p, one rational per character
// in characters_of order: v_p(Norm finite_p(chi)) + v_p(Norm global(chi)),
// each divided by phi of the value's own level.  Additive in the rep and
// presentation independent.
std::vector<Rational> totval_normalized(const RelKRep& r, long p);

// Integer-scaled projection at the rep's declared ambient level
// (normalized value times phi(ambient_level)).
std::vector<Integer> class_projections(const RelKRep& r, long p);

// Batch form: one row per requested prime, computing every value's norm
// once instead of once per prime.
std::vector<std::vector<Rational>> totval_table(const RelKRep& r,
                                                const std::vector<long>& primes);

// |embed(global(chi))| per character at the j = 1 embedding.
std::vector<BigFloat> arch_profile(const RelKRep& r, long precision_bits);

// Arithmetic-classgroup representative: the finite component passes
// through, the global component is replaced by archimedean moduli.
struct ArithClassRep {
    FinAbGroup group;
    std::map<long, CharFn> finite;
    std::vector<BigFloat> arch;  // characters_of order, strictly positive
    long precision_bits = 128;
};

ArithClassRep to_arith_class(const RelKRep& r, long precision_bits);

enum class MetricKind { hecke, standard };

// The metrised class [O_L, Hecke form] or [H^L, standard form]: finite
// component from the normal-integral-basis data, archimedean component by
// a Gram computation of the chosen hermitian form on the character line.
ArithClassRep metrised_class(const AbelianField& L, MetricKind kind, long precision_bits);

// Exact Hecke Gram matrix Tr(x_i conj(x_j)) of the NIB orbit (the trace
// route; the embedding route lives in metrised_class).
std::vector<std::vector<Rational>> hecke_gram_exact(const AbelianField& L);

// Canonical K-bar normalization: multiply the global component by the
// character values of a canonical group element (the lexicographically
// least one placing the value at the reference character in the
// canonical half plane).
RelKRep normalize_kbar(const RelKRep& r);

// Class of a tame torsor: global component the resolvend transforms,
// finite component 1, output K-bar normalized.
RelKRep torsor_relk_class(const TorsorDescriptor& T);

}  // namespace galmod
