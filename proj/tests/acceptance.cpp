// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are fixed here, not configurable.

#include <numeric>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "galmod/cyclo_valuation.hpp"
#include "galmod/relk.hpp"
#include "galmod/serialize.hpp"
#include "galmod/torsion.hpp"

#include <fstream>

using namespace galmod;

namespace {

int g_failures = 0;
int g_checks = 0;
bool g_current_ok = true;

void expect(bool ok, const char* what) {
    ++g_checks;
    if (!ok) {
        g_current_ok = false;
        std::printf("       check failed: %s\n", what);
    }
}

void criterion(int number, const char* name, const std::function<void()>& body) {
    g_current_ok = true;
    auto start = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        g_current_ok = false;
        std::printf("       exception: %s\n", e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d. %s (%.1fs)\n", g_current_ok ? "PASS" : "FAIL", number, name, secs);
    std::fflush(stdout);
    if (!g_current_ok) ++g_failures;
}

CycloNumber zeta(long n, long k = 1) { return CycloNumber::root_of_unity(n, k); }

std::vector<DirichletCharacter> all_primitive_up_to(long bound) {
    std::vector<DirichletCharacter> out;
    for (long f = 1; f <= bound; ++f) {
        if (f > 2 && f % 4 == 2) continue;  // no primitive characters there
        for (auto& chi : primitive_characters_mod(f)) out.push_back(std::move(chi));
    }
    return out;
}

CharTable load_q8() {
    for (const char* prefix : {"fixtures/", "../fixtures/", "../../fixtures/"}) {
        std::ifstream in(std::string(prefix) + "q8.json");
        if (in) return chartable_from_json(Json::parse(in));
    }
    throw BadDescriptor("q8 fixture not found");
}

// direct complex summation oracle, independent of the exact machinery
ComplexApprox direct_gauss_sum(const DirichletCharacter& chi, long bits) {
    long f = chi.conductor();
    BigFloat two_pi = BigFloat::of(2L, bits) * BigFloat::pi(bits);
    BigFloat re(bits), im(bits);
    for (long a = 1; a <= f; ++a) {
        if (f > 1 && std::gcd(a, f) != 1) continue;
        long s = chi.exponent_at(f == 1 ? 0 : a);
        // chi(a) = exp(2 pi i s / order)
        BigFloat phase_chi = two_pi * BigFloat::of(s, bits) / BigFloat::of(chi.order(), bits);
        BigFloat phase_exp = two_pi * BigFloat::of(a % f, bits) / BigFloat::of(f, bits);
        BigFloat ang = phase_chi + phase_exp;
        re = re + cos(ang);
        im = im + sin(ang);
        if (f == 1) break;
    }
    ComplexApprox out(bits);
    out.re = re;
    out.im = im;
    return out;
}

}  // namespace

int main() {
    const long kBits = 128;

    criterion(1, "Gauss-sum identities, conductor <= 40", [&] {
        auto chars = all_primitive_up_to(40);
        expect(chars.size() == 285, "the primitive characters of conductor <= 40");
        for (const auto& chi : chars) {
            long f = chi.conductor();
            long m = chi.order();
            long N = lcm_ll(f, m);
            CycloNumber tau = gauss_sum(chi);

            // tau(chi) tau(bar chi) = chi(-1) f exactly
            expect(tau * gauss_sum(chi.conj()) == CycloNumber(Rational(chi.parity() * f)),
                   "tau(chi) tau(bar chi) = chi(-1) f");

            // sigma_k(tau) = bar chi(k) tau exactly on the stabilizer of chi;
            // the right side multiplies by the root of unity bar chi(k)
            long checked = 0;
            for (long k = 1; k < N && checked < 8; k += m) {
                if (std::gcd(k, N) != 1) continue;
                ++checked;
                long bar_exp = (chi.order() - chi.exponent_at(k)) % chi.order();
                CycloNumber rhs = tau.mul_zeta(bar_exp * (N / m));
                expect(tau.galois_apply(k) == rhs,
                       "sigma_k(tau) = bar chi(k) tau for k = 1 mod ord(chi)");
            }

            // |tau| = sqrt(f) within 1e-12 at 128 bits
            double a = tau.embed(1, kBits).abs_double();
            expect(std::abs(a - std::sqrt(double(f))) < 1e-12, "|tau| = sqrt(f)");
        }
    });

    criterion(2, "quadratic Gauss sign vs direct summation, f <= 40", [&] {
        int count = 0;
        for (const auto& chi : all_primitive_up_to(40)) {
            if (chi.order() != 2) continue;
            ++count;
            long f = chi.conductor();
            CycloNumber tau = gauss_sum(chi);
            ComplexApprox exact_emb = tau.embed(1, kBits);
            ComplexApprox direct = direct_gauss_sum(chi, kBits);
            expect(std::abs(exact_emb.re.to_double() - direct.re.to_double()) < 1e-20,
                   "exact and direct sums agree (re)");
            expect(std::abs(exact_emb.im.to_double() - direct.im.to_double()) < 1e-20,
                   "exact and direct sums agree (im)");
            double root = std::sqrt(double(f));
            if (chi.parity() == 1) {
                expect(std::abs(exact_emb.re.to_double() - root) < 1e-12 &&
                           std::abs(exact_emb.im.to_double()) < 1e-12,
                       "even quadratic: tau = +sqrt(f)");
            } else {
                expect(std::abs(exact_emb.im.to_double() - root) < 1e-12 &&
                           std::abs(exact_emb.re.to_double()) < 1e-12,
                       "odd quadratic: tau = +i sqrt(f)");
            }
        }
        expect(count >= 12, "all primitive quadratic characters covered");
    });

    criterion(3, "valuation-level match of delta and Gauss representatives", [&] {
        auto fields = enumerate_tame_fields(40, 6);
        expect(fields.size() >= 40, "field sweep is populated");
        auto primes = primes_up_to(40);
        for (const auto& L : fields) {
            RelKRep d = delta_rep_of_field(L);
            RelKRep g = gauss_rep_of_field(L);
            long n = L.degree();
            for (long i = 0; i < n; ++i) {
                // one norm per value; every p then reads off a valuation
                Rational nd = cyclo_norm(d.global().values()[i]);
                Rational ng = cyclo_norm(g.global().values()[i]);
                long phid = euler_phi(d.global().values()[i].level());
                long phig = euler_phi(g.global().values()[i].level());
                for (long p : primes) {
                    if (p > L.conductor() && L.conductor() > 1) continue;
                    Rational td(rat_valuation(nd, Integer(p)), phid);
                    Rational tg(rat_valuation(ng, Integer(p)), phig);
                    td.canonicalize();
                    tg.canonicalize();
                    // finite components contribute only at their support
                    auto itd = d.finite().local.find(p);
                    if (itd != d.finite().local.end())
                        td += cyclo_tv(itd->second.values()[i], p);
                    auto itg = g.finite().local.find(p);
                    if (itg != g.finite().local.end())
                        tg += cyclo_tv(itg->second.values()[i], p);
                    expect(td == tg, "totval_p(delta)(chi) = totval_p(gauss)(chi)");
                }
            }
            // the public integer projections agree at the common level too
            for (long p : {2L, 3L, 5L}) {
                auto dd = d.diff(g);
                for (const auto& t : totval_normalized(dd, p))
                    expect(t == 0, "difference class has zero projection");
            }
        }
    });

    criterion(4, "Hecke metrised class matches |tau| sqrt(n)", [&] {
        auto fields = enumerate_tame_fields(40, 6);
        for (const auto& L : fields) {
            long n = L.degree();
            auto hecke = metrised_class(L, MetricKind::hecke, kBits);
            auto chars = L.characters();
            for (size_t i = 0; i < chars.size(); ++i) {
                auto chi = dirichlet_from_field_character(L, chars[i]).primitive_part();
                double tau_abs = gauss_sum(chi).embed(1, kBits).abs_double();
                double want = tau_abs * std::sqrt(double(n));
                expect(std::abs(hecke.arch[i].to_double() - want) < 1e-10,
                       "hecke arch = |tau| sqrt(n) within 1e-10");
            }
        }
    });

    criterion(5, "Chase cokernel order and cht consistency", [&] {
        auto fields = enumerate_tame_fields(40, 4);
        for (const auto& L : fields) {
            TorsionModule t = chase_cokernel(L);
            Integer d = L.discriminant();
            long n = L.degree();
            // |Cok psi|^2 = |d_L|^n avoids square roots for odd n
            Integer lhs = t.order * t.order, rhs = 1;
            for (long i = 0; i < n; ++i) rhs *= d;
            expect(lhs == rhs, "|Cok psi| = |d_L|^{n/2}");
            expect(cht_check(L).ok, "cht valuation identity per prime");
        }
    });

    criterion(6, "membership-primitivity equivalence on 500 cases", [&] {
        std::mt19937 rng(424242);
        std::uniform_int_distribution<int> kind(0, 4);
        std::uniform_int_distribution<long> small(-2, 2);
        const std::vector<std::vector<long>> gammas{{2}, {3}, {4}, {2, 2}};
        const long levels[] = {3, 5, 8, 12, 24};
        std::uniform_int_distribution<size_t> pick_level(0, 4);

        int done = 0;
        while (done < 500) {
            FinAbGroup G(gammas[done % gammas.size()]);
            auto elems = elements_of(G);
            long level = levels[pick_level(rng)];
            GroupAlgebraElement a = GroupAlgebraElement::one(G);
            switch (kind(rng)) {
                case 0:
                    a = GroupAlgebraElement::of_element(elems[rng() % elems.size()]);
                    break;
                case 1: {
                    long c = small(rng);
                    if (c == 0) c = 1;
                    a = GroupAlgebraElement::of_element(elems[rng() % elems.size()])
                            .mul(GroupAlgebraElement::of_scalar(G, CycloNumber(Rational(c))));
                    break;
                }
                case 2: {  // root-of-unity coefficients (resolvend-like)
                    std::vector<CycloNumber> cs;
                    for (long i = 0; i < G.order(); ++i)
                        cs.push_back(zeta(level, static_cast<long>(rng() % level)));
                    a = GroupAlgebraElement(G, std::move(cs));
                    break;
                }
                case 3: {  // crafted non-member shape: 1 + sqrt2 * gamma
                    std::vector<CycloNumber> cs(G.order());
                    cs[0] = CycloNumber(Rational(1));
                    cs[1 + static_cast<long>(rng() % (G.order() - 1))] =
                        zeta(8, 1) + zeta(8, 7);
                    a = GroupAlgebraElement(G, std::move(cs));
                    break;
                }
                default: {  // random small elements
                    std::vector<CycloNumber> cs;
                    for (long i = 0; i < G.order(); ++i)
                        cs.push_back(CycloNumber(Rational(small(rng))) +
                                     zeta(level).scaled(Rational(small(rng))));
                    a = GroupAlgebraElement(G, std::move(cs));
                    break;
                }
            }
            if (!a.is_invertible()) continue;
            expect(h_membership(a).member == primitivity_test(a),
                   "h_membership agrees with primitivity_test");
            ++done;
        }
    });

    criterion(7, "torsor class additivity and injectivity shadows", [&] {
        // tame C2/C3 torsors up to conductor 60 through their fields
        std::vector<TorsorDescriptor> c2_torsors, c3_torsors;
        FinAbGroup c2({2}), c3({3});
        for (long f = 3; f <= 60; ++f) {
            if (!is_squarefree(f) || f % 4 == 2) continue;
            for (const auto& chi : primitive_characters_mod(f)) {
                if (chi.order() == 2 && c2_torsors.size() < 40) {
                    long g = 0;
                    std::vector<std::pair<long, std::vector<long>>> pairs;
                    UnitGroup units(f);
                    for (long gen : units.generators())
                        pairs.push_back({gen, {chi.exponent_at(gen)}});
                    c2_torsors.push_back(make_torsor(c2, f, pairs));
                    (void)g;
                }
                if (chi.order() == 3 && c3_torsors.size() < 20) {
                    std::vector<std::pair<long, std::vector<long>>> pairs;
                    UnitGroup units(f);
                    for (long gen : units.generators())
                        pairs.push_back({gen, {chi.exponent_at(gen)}});
                    c3_torsors.push_back(make_torsor(c3, f, pairs));
                }
            }
        }
        expect(c2_torsors.size() >= 15, "enough C2 torsors");
        expect(c3_torsors.size() >= 8, "enough C3 torsors");

        std::mt19937 rng(99);
        auto primes = primes_up_to(60);
        auto check_pair = [&](const TorsorDescriptor& A, const TorsorDescriptor& B) {
            auto ra = torsor_relk_class(A);
            auto rb = torsor_relk_class(B);
            auto rp = torsor_relk_class(torsor_product(A, B));
            auto ta = totval_table(ra, primes);
            auto tb = totval_table(rb, primes);
            auto tc = totval_table(rp, primes);
            for (size_t pi = 0; pi < primes.size(); ++pi)
                for (size_t i = 0; i < ta[pi].size(); ++i)
                    expect(tc[pi][i] == ta[pi][i] + tb[pi][i], "totval additivity");
            auto pa = arch_profile(ra, kBits);
            auto pb = arch_profile(rb, kBits);
            auto pc = arch_profile(rp, kBits);
            for (size_t i = 0; i < pa.size(); ++i)
                expect(std::abs(pc[i].to_double() - pa[i].to_double() * pb[i].to_double()) <
                           1e-10,
                       "arch multiplicativity");
        };
        for (int t = 0; t < 15; ++t) {
            check_pair(c2_torsors[rng() % c2_torsors.size()],
                       c2_torsors[rng() % c2_torsors.size()]);
        }
        for (int t = 0; t < 15; ++t) {
            check_pair(c3_torsors[rng() % c3_torsors.size()],
                       c3_torsors[rng() % c3_torsors.size()]);
        }

        // injectivity shadow: distinct C2 torsors have distinct signatures
        std::set<std::vector<std::string>> signatures;
        for (const auto& T : c2_torsors) {
            auto r = torsor_relk_class(T);
            std::vector<std::string> sig;
            for (const auto& row : totval_table(r, primes))
                for (const auto& v : row) sig.push_back(rational_to_string(v));
            signatures.insert(sig);
        }
        expect(signatures.size() == c2_torsors.size(),
               "valuation signatures separate C2 torsors");
    });

    criterion(8, "diagonal triviality of unit images", [&] {
        std::mt19937 rng(2718281);
        std::uniform_int_distribution<long> small(-3, 3);
        const std::vector<std::vector<long>> gs{{2}, {3}, {4}, {2, 2}, {6}};
        auto primes = primes_up_to(50);
        int done = 0;
        while (done < 50) {
            FinAbGroup G(gs[done % gs.size()]);
            std::vector<CycloNumber> cs;
            for (long i = 0; i < G.order(); ++i)
                cs.push_back(CycloNumber(Rational(small(rng))));
            GroupAlgebraElement a(G, std::move(cs));
            if (!a.is_invertible()) continue;
            CharFn det = det_of(a);
            IdelicCharFn fin{G, {}};
            for (long p : primes) fin.local.emplace(p, det);
            RelKRep rep(fin, det.pointwise_inverse());
            // exact: N(theta) N(theta^{-1}) = 1 makes every projection vanish
            for (size_t i = 0; i < det.values().size(); ++i) {
                Rational prod = cyclo_norm(det.values()[i]) *
                                cyclo_norm(rep.global().values()[i]);
                expect(abs(prod) == 1, "norms of theta and theta^{-1} cancel");
            }
            for (long p : {2L, 3L, 5L, 47L}) {
                for (const auto& v : totval_normalized(rep, p))
                    expect(v == 0, "zero projection for a diagonal image");
            }
            ++done;
        }
    });

    criterion(9, "pullback metric identity and boundary quotient", [&] {
        // pullback Gram vs exact trace Gram within 1e-12 (degree <= 6, f <= 40)
        for (const auto& L : enumerate_tame_fields(40, 6)) {
            long n = L.degree();
            auto exact = hecke_gram_exact(L);
            auto alpha = L.nib_generator();
            auto gs = L.group_elements();
            long bits = 192;
            std::vector<std::vector<ComplexApprox>> S(
                n, std::vector<ComplexApprox>(n, ComplexApprox(bits)));
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j)
                    S[i][j] = L.apply(gs[i], L.apply(gs[j], alpha)).embed(1, bits);
            for (long a = 0; a < n; ++a)
                for (long b = 0; b < n; ++b) {
                    ComplexApprox acc(bits);
                    for (long i = 0; i < n; ++i) acc = acc + S[i][a].conj() * S[i][b];
                    expect(std::abs(acc.re.to_double() - exact[a][b].get_d()) < 1e-12,
                           "pullback Gram matches the Hecke Gram (re)");
                    expect(std::abs(acc.im.to_double()) < 1e-12,
                           "pullback Gram matches the Hecke Gram (im)");
                }
        }
        // Prop 4.10 shadow on delta triples of degree <= 4
        for (const auto& L : enumerate_tame_fields(40, 4)) {
            auto ac = to_arith_class(delta_rep_of_field(L), kBits);
            auto hecke = metrised_class(L, MetricKind::hecke, kBits);
            auto standard = metrised_class(L, MetricKind::standard, kBits);
            for (size_t i = 0; i < ac.arch.size(); ++i) {
                double quotient = hecke.arch[i].to_double() / standard.arch[i].to_double();
                expect(std::abs(ac.arch[i].to_double() - quotient) < 1e-10,
                       "boundary arch equals the metric quotient");
            }
        }
    });

    criterion(10, "Pfaffian exponent integrality and Q8 values", [&] {
        CharTable q8 = load_q8();
        auto symp = symplectic_characters(q8);
        expect(symp.size() == 1 && symp[0] == 4, "Q8 has one symplectic row");
        for (long p : {3L, 5L, 7L}) {
            for (long fdeg : {1L, 2L}) {
                SupplementedRamData ram{{{fdeg, {1, 1, 1, 1, 0}}}};
                CycloNumber v = pfaffian(q8, ram, 4, p);
                Rational want = fdeg == 1 ? Rational(-p) : Rational(p * p);
                expect(v == CycloNumber(want), "(-p)^{f_p} fixture value");
            }
        }
        SupplementedRamData bad{{{1, {1, 1, 1, 1, 1}}}};
        bool threw = false;
        try {
            pfaffian(q8, bad, 4, 3);
        } catch (const NonIntegralExponent&) {
            threw = true;
        }
        expect(threw, "half-integral exponent is rejected");
    });

    std::printf("%d criteria failed, %d checks run\n", g_failures, g_checks);
    return g_failures == 0 ? 0 : 1;
}
