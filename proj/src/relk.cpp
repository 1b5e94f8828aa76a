#include "galmod/relk.hpp"

#include <algorithm>

#include "galmod/cyclo_valuation.hpp"
#include "galmod/errors.hpp"

namespace galmod {

void IdelicCharFn::validate() const {
    for (const auto& [p, fn] : local) {
        if (fn.group() != group) throw GroupMismatch("idelic component group");
        if (!is_prime(p)) throw BadDescriptor("idelic support must be prime-indexed");
        long level = lcm_ll(fn.ambient_level(), group.exponent());
        if (!charfn_check_equivariance(fn, level))
            throw BadDescriptor("idelic component at p=" + std::to_string(p) +
                                " is not Omega-equivariant");
    }
}

RelKRep::RelKRep(IdelicCharFn finite, CharFn global, bool kbar_normalized)
    : finite_(std::move(finite)), global_(std::move(global)),
      kbar_normalized_(kbar_normalized) {
    if (global_.group() != finite_.group) throw GroupMismatch("RelKRep components");
    finite_.validate();
}

RelKRep RelKRep::zero(const FinAbGroup& G) {
    return RelKRep(IdelicCharFn{G, {}}, CharFn::constant_one(G));
}

long RelKRep::ambient_level() const {
    long L = group().exponent();
    L = lcm_ll(L, global_.ambient_level());
    for (const auto& [p, fn] : finite_.local) L = lcm_ll(L, fn.ambient_level());
    return L;
}

RelKRep RelKRep::add(const RelKRep& o) const {
    if (group() != o.group()) throw GroupMismatch("RelKRep addition");
    IdelicCharFn fin{group(), finite_.local};
    for (const auto& [p, fn] : o.finite_.local) {
        auto it = fin.local.find(p);
        if (it == fin.local.end())
            fin.local.emplace(p, fn);
        else
            it->second = it->second.pointwise_mul(fn);
    }
    return RelKRep(std::move(fin), global_.pointwise_mul(o.global_));
}

RelKRep RelKRep::neg() const {
    IdelicCharFn fin{group(), {}};
    for (const auto& [p, fn] : finite_.local) fin.local.emplace(p, fn.pointwise_inverse());
    return RelKRep(std::move(fin), global_.pointwise_inverse());
}

RelKRep class_of_twisted_form(const TwistedFormData& T) {
    if (T.rank != 1) throw BadDescriptor("only rank-one twisted forms are supported");
    for (const auto& [p, fn] : T.local_dets)
        for (const auto& v : fn.values())
            if (v.is_zero()) throw Singular("non-invertible local datum at p=" +
                                            std::to_string(p));
    return RelKRep(IdelicCharFn{T.group, T.local_dets}, T.global_iso);
}

RelKRep delta_rep_of_field(const AbelianField& L) {
    CycloNumber alpha = L.nib_generator();  // WildRamification if not tame
    std::vector<CycloNumber> values;
    for (const auto& chi : L.characters())
        values.push_back(lagrange_resolvent(L, alpha, chi));
    CharFn global(L.galois_group(), std::move(values));
    return RelKRep(IdelicCharFn{L.galois_group(), {}}, std::move(global));
}

RelKRep gauss_rep_of_field(const AbelianField& L) {
    if (!L.tame())
        throw WildRamification("conductor " + std::to_string(L.conductor()) +
                               " is not squarefree");
    auto chars = L.characters();
    std::vector<CycloNumber> global_values;
    std::vector<DirichletCharacter> primitive;
    for (const auto& chi : chars) {
        DirichletCharacter d = dirichlet_from_field_character(L, chi).primitive_part();
        global_values.push_back(gauss_sum(d));
        primitive.push_back(std::move(d));
    }
    IdelicCharFn fin{L.galois_group(), {}};
    for (auto [p, e] : factorize(L.conductor())) {
        std::vector<CycloNumber> ys;
        ys.reserve(chars.size());
        for (const auto& d : primitive) ys.push_back(unramified_characteristic(d, p));
        fin.local.emplace(p, CharFn(L.galois_group(), std::move(ys)));
    }
    return RelKRep(std::move(fin), CharFn(L.galois_group(), std::move(global_values)));
}

std::vector<Rational> totval_normalized(const RelKRep& r, long p) {
    std::vector<Rational> out;
    long n = r.group().order();
    out.reserve(n);
    auto it = r.finite().local.find(p);
    for (long i = 0; i < n; ++i) {
        Rational t = cyclo_tv(r.global().values()[i], p);
        if (it != r.finite().local.end()) t += cyclo_tv(it->second.values()[i], p);
        t.canonicalize();
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<std::vector<Rational>> totval_table(const RelKRep& r,
                                                const std::vector<long>& primes) {
    long n = r.group().order();
    std::vector<Rational> global_norm(n);
    std::vector<long> global_phi(n);
    for (long i = 0; i < n; ++i) {
        global_norm[i] = cyclo_norm(r.global().values()[i]);
        global_phi[i] = euler_phi(r.global().values()[i].level());
    }
    std::map<long, std::pair<std::vector<Rational>, std::vector<long>>> finite_norms;
    for (const auto& [p, fn] : r.finite().local) {
        std::vector<Rational> norms(n);
        std::vector<long> phis(n);
        for (long i = 0; i < n; ++i) {
            norms[i] = cyclo_norm(fn.values()[i]);
            phis[i] = euler_phi(fn.values()[i].level());
        }
        finite_norms.emplace(p, std::make_pair(std::move(norms), std::move(phis)));
    }
    std::vector<std::vector<Rational>> out;
    out.reserve(primes.size());
    for (long p : primes) {
        std::vector<Rational> row(n);
        auto fin = finite_norms.find(p);
        for (long i = 0; i < n; ++i) {
            Rational t(rat_valuation(global_norm[i], Integer(p)), global_phi[i]);
            t.canonicalize();
            if (fin != finite_norms.end()) {
                Rational u(rat_valuation(fin->second.first[i], Integer(p)),
                           fin->second.second[i]);
                u.canonicalize();
                t += u;
            }
            row[i] = std::move(t);
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<Integer> class_projections(const RelKRep& r, long p) {
    long phiN = euler_phi(r.ambient_level());
    std::vector<Integer> out;
    for (const Rational& t : totval_normalized(r, p)) {
        Rational scaled = t * phiN;
        scaled.canonicalize();
        if (scaled.get_den() != 1)
            throw BadDescriptor("projection not integral at the ambient level");
        out.push_back(scaled.get_num());
    }
    return out;
}

std::vector<BigFloat> arch_profile(const RelKRep& r, long precision_bits) {
    std::vector<BigFloat> out;
    for (const auto& v : r.global().values())
        out.push_back(v.embed(1, precision_bits).abs());
    return out;
}

ArithClassRep to_arith_class(const RelKRep& r, long precision_bits) {
    ArithClassRep out;
    out.group = r.group();
    out.finite = r.finite().local;
    out.arch = arch_profile(r, precision_bits);
    out.precision_bits = precision_bits;
    return out;
}

std::vector<std::vector<Rational>> hecke_gram_exact(const AbelianField& L) {
    CycloNumber alpha = L.nib_generator();
    auto gs = L.group_elements();
    long n = L.degree();
    // complex conjugation on L is the image of -1
    GroupElement conj_elt = L.quotient().project(
        L.conductor() == 1 ? 0 : L.conductor() - 1);
    std::vector<CycloNumber> orbit;
    for (const auto& g : gs) orbit.push_back(L.apply(g, alpha));
    std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            CycloNumber cj = L.apply(conj_elt, orbit[j]);
            gram[i][j] = L.trace(orbit[i] * cj);
        }
    return gram;
}

ArithClassRep metrised_class(const AbelianField& L, MetricKind kind, long precision_bits) {
    if (!L.tame())
        throw WildRamification("conductor " + std::to_string(L.conductor()) +
                               " is not squarefree");
    long n = L.degree();
    auto gs = L.group_elements();
    auto chars = L.characters();
    long bits = precision_bits + 16;

    ArithClassRep out;
    out.group = L.galois_group();
    out.precision_bits = precision_bits;

    if (kind == MetricKind::standard) {
        // [H^L, standard]: orthonormal basis indexed by embeddings; the
        // character vector has root-of-unity coordinates
        for (const auto& chi : chars) {
            BigFloat acc(bits);
            for (const auto& g : gs) {
                ComplexApprox c = chi.eval(g).conjugate().embed(1, bits);
                acc = acc + c.re * c.re + c.im * c.im;
            }
            out.arch.push_back(sqrt(acc));
        }
        return out;
    }

    // [O_L, Hecke]: embedding matrix S[i][j] = sigma_i(g_j(alpha)),
    // Gram = S^H S, arch(chi) = sqrt(c^H Gram c) with c_j = conj(chi(g_j))
    CycloNumber alpha = L.nib_generator();
    std::vector<CycloNumber> orbit;
    for (const auto& g : gs) orbit.push_back(L.apply(g, alpha));
    std::vector<std::vector<ComplexApprox>> S(n, std::vector<ComplexApprox>(n, ComplexApprox(bits)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            S[i][j] = L.apply(gs[i], orbit[j]).embed(1, bits);
    std::vector<std::vector<ComplexApprox>> gram(n, std::vector<ComplexApprox>(n, ComplexApprox(bits)));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            ComplexApprox acc(bits);
            for (long i = 0; i < n; ++i) acc = acc + S[i][a].conj() * S[i][b];
            gram[a][b] = acc;
        }
    for (const auto& chi : chars) {
        std::vector<ComplexApprox> c;
        c.reserve(n);
        for (const auto& g : gs) c.push_back(chi.eval(g).conjugate().embed(1, bits));
        ComplexApprox acc(bits);
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) acc = acc + c[a].conj() * gram[a][b] * c[b];
        out.arch.push_back(sqrt(acc.re));
    }
    return out;
}

RelKRep normalize_kbar(const RelKRep& r) {
    const FinAbGroup& G = r.group();
    if (G.order() <= 1) {
        return RelKRep(r.finite(), r.global(), true);
    }
    auto chars = characters_of(G);
    const Character& ref = chars[1];  // first nontrivial character
    auto elems = elements_of(G);

    const CycloNumber& base = r.global().values()[1];
    std::optional<GroupElement> best_gamma;
    BigFloat best_re(160), best_im(160);
    for (const auto& gamma : elems) {
        CycloNumber v = base * ref.eval(gamma);
        ComplexApprox c = v.embed(1, 144);
        if (!best_gamma || c.re > best_re ||
            (!(c.re < best_re) && c.im > best_im)) {
            best_gamma = gamma;
            best_re = c.re;
            best_im = c.im;
        }
    }
    std::vector<CycloNumber> vals;
    vals.reserve(chars.size());
    for (size_t i = 0; i < chars.size(); ++i)
        vals.push_back(r.global().values()[i] * chars[i].eval(*best_gamma));
    return RelKRep(r.finite(), CharFn(G, std::move(vals)), true);
}

RelKRep torsor_relk_class(const TorsorDescriptor& T) {
    GroupAlgebraElement r = resolvend_of_torsor(T);  // WildRamification if not tame
    CharFn global = det_of(r);
    RelKRep rep(IdelicCharFn{T.gamma, {}}, std::move(global));
    return normalize_kbar(rep);
}

}  // namespace galmod
