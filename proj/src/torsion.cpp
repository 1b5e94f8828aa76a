#include "galmod/torsion.hpp"

#include "galmod/errors.hpp"
#include "galmod/relk.hpp"

namespace galmod {

namespace {

long enum_index_of(const FinAbGroup& g, const std::vector<long>& e) {
    long idx = 0;
    const auto& d = g.invariant_factors();
    for (size_t i = 0; i < d.size(); ++i) idx = idx * d[i] + e[i];
    return idx;
}

// expansion coefficients of alpha * g_c(alpha) in the orbit basis; all
// integral because the orbit is an integral basis
std::vector<std::vector<Integer>> multiplication_tensor(const AbelianField& L,
                                                        const CycloNumber& alpha) {
    auto gs = L.group_elements();
    long n = L.degree();
    const CycloContext& ctx = cyclo_context(L.conductor());
    long phi = ctx.phi;

    std::vector<CycloNumber> orbit;
    orbit.reserve(n);
    for (const auto& g : gs) orbit.push_back(L.apply(g, alpha));

    // solve B y = v for each product, B the phi x n orbit-coordinate matrix
    std::vector<std::vector<Rational>> B(phi, std::vector<Rational>(n));
    for (long j = 0; j < n; ++j) {
        CycloNumber lifted = orbit[j].at_level(L.conductor());
        for (long i = 0; i < phi; ++i) B[i][j] = lifted.coeffs()[i];
    }

    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (long c = 0; c < n; ++c) {
        CycloNumber prod = (alpha * orbit[c]).at_level(L.conductor());
        // Gaussian elimination on the augmented system each time; n is tiny
        std::vector<std::vector<Rational>> aug(phi, std::vector<Rational>(n + 1));
        for (long i = 0; i < phi; ++i) {
            for (long j = 0; j < n; ++j) aug[i][j] = B[i][j];
            aug[i][n] = prod.coeffs()[i];
        }
        long rank = 0;
        std::vector<long> pivot_cols;
        for (long j = 0; j < n && rank < phi; ++j) {
            long p = rank;
            while (p < phi && aug[p][j] == 0) ++p;
            if (p == phi) continue;
            std::swap(aug[rank], aug[p]);
            Rational inv = 1 / aug[rank][j];
            for (long t = j; t <= n; ++t) aug[rank][t] *= inv;
            for (long i = 0; i < phi; ++i) {
                if (i == rank || aug[i][j] == 0) continue;
                Rational f = aug[i][j];
                for (long t = j; t <= n; ++t) aug[i][t] -= f * aug[rank][t];
            }
            pivot_cols.push_back(j);
            ++rank;
        }
        if (rank != n) throw BadDescriptor("orbit is not a basis");
        for (long i = rank; i < phi; ++i)
            if (aug[i][n] != 0) throw BadDescriptor("product not in the orbit span");
        for (long r = 0; r < rank; ++r) {
            const Rational& y = aug[r][n];
            if (y.get_den() != 1)
                throw BadDescriptor("non-integral structure constant");
            m[c][pivot_cols[r]] = y.get_num();
        }
    }
    return m;
}

}  // namespace

IntegerMatrix chase_matrix(const AbelianField& L) {
    CycloNumber alpha = L.nib_generator();  // WildRamification when wild
    auto gs = L.group_elements();
    long n = L.degree();
    auto m = multiplication_tensor(L, alpha);

    const FinAbGroup& G = L.galois_group();
    // index helpers on group elements
    auto idx = [&](const GroupElement& g) { return enum_index_of(G, g.exponents); };

    IntegerMatrix M(n * n, n * n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            long col = i * n + j;
            for (long gi = 0; gi < n; ++gi) {
                // psi(e_ij)(g) = (g g_i)(alpha) * g_j(alpha)
                GroupElement c_elt = gs[gi].mul(gs[i]);
                long c = idx(c_elt);
                GroupElement d_elt = c_elt.inverse().mul(gs[j]);
                long d = idx(d_elt);
                for (long k = 0; k < n; ++k) {
                    if (m[d][k] == 0) continue;
                    long t = idx(c_elt.mul(gs[k]));
                    M.at(gi * n + t, col) += m[d][k];
                }
                (void)c;
            }
        }
    }
    return M;
}

TorsionModule chase_cokernel(const AbelianField& L) {
    IntegerMatrix M = chase_matrix(L);
    SNFResult s = snf(M);
    TorsionModule out;
    out.invariant_factors = s.diagonal();
    out.order = 1;
    for (const auto& d : out.invariant_factors) {
        if (d == 0) throw BadDescriptor("psi is not injective");
        out.order *= d;
    }
    Integer rest = out.order;
    for (long p = 2; rest > 1; ++p) {
        if (!is_prime(p)) continue;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        Integer pe = 1;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
            rest /= p;
            pe *= p;
        }
        out.per_prime_orders[p] = pe;
    }
    return out;
}

ChtReport cht_check(const AbelianField& L) {
    TorsionModule tm = chase_cokernel(L);
    RelKRep delta = delta_rep_of_field(L);
    long n = L.degree();

    ChtReport report;
    for (auto [p, e] : factorize(L.conductor())) {
        ChtReport::PerPrime row;
        row.p = p;
        auto it = tm.per_prime_orders.find(p);
        row.lhs = (it == tm.per_prime_orders.end())
                      ? Integer(0)
                      : Integer(int_valuation(it->second, p));
        Rational rhs(0);
        for (const Rational& t : totval_normalized(delta, p)) rhs += t;
        rhs *= n;
        rhs.canonicalize();
        row.rhs = rhs;
        row.equal = (Rational(row.lhs) == rhs);
        if (!row.equal) report.ok = false;
        report.primes.push_back(std::move(row));
    }
    // any cokernel prime outside the ramified set is a violation
    for (const auto& [p, pe] : tm.per_prime_orders) {
        if (L.conductor() % p != 0) {
            ChtReport::PerPrime row;
            row.p = p;
            row.lhs = int_valuation(pe, p);
            row.rhs = Rational(0);
            row.equal = false;
            report.ok = false;
            report.primes.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace galmod
