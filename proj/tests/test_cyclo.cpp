#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galmod/cyclo.hpp"
#include "galmod/cyclo_valuation.hpp"
#include "galmod/errors.hpp"
#include "galmod/numtheory.hpp"
#include "galmod/polyz.hpp"

using namespace galmod;

namespace {

CycloNumber zeta(long n, long k = 1) { return CycloNumber::root_of_unity(n, k); }

CycloNumber random_cyclo(std::mt19937& rng, long level) {
    const CycloContext& ctx = cyclo_context(level);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Rational> c(ctx.phi);
    for (auto& q : c) q = make_rational(num(rng), den(rng));
    return CycloNumber(level, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Integer>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
    // phi(105) = 48; the first level with a coefficient of magnitude 2
    auto c105 = cyclotomic_polynomial(105);
    CHECK(c105.size() == 49);
    bool has_two = false;
    for (const auto& x : c105) has_two = has_two || (abs(x) == 2);
    CHECK(has_two);
}

TEST_CASE("defining relations") {
    // zeta_4 * zeta_4 = -1
    CHECK(zeta(4) * zeta(4) == CycloNumber(Rational(-1)));
    // (1 + zeta_3)(1 + zeta_3^2) = 1, by hand: 1 + z + z^2 + z^3 = 1 + (-1) + 1
    CycloNumber a = CycloNumber(Rational(1)) + zeta(3);
    CycloNumber b = CycloNumber(Rational(1)) + zeta(3, 2);
    CHECK(a * b == CycloNumber(Rational(1)));
    // inv(2) = 1/2
    CHECK(CycloNumber(Rational(2)).inverse() == CycloNumber(make_rational(1, 2)));
}

TEST_CASE("galois action basics") {
    // sigma_2(zeta_3) = zeta_3^2
    CHECK(zeta(3).galois_apply(2) == zeta(3, 2));
    // identity fixes everything
    std::mt19937 rng(7);
    for (int i = 0; i < 10; ++i) {
        auto a = random_cyclo(rng, 12);
        CHECK(a.galois_apply(1) == a);
    }
    // composition law
    auto a = random_cyclo(rng, 15);
    CHECK(a.galois_apply(2).galois_apply(4) == a.galois_apply(8));
    CHECK_THROWS_AS(zeta(6).galois_apply(3), InvalidGaloisIndex);
}

TEST_CASE("ring axioms at mixed levels") {
    std::mt19937 rng(42);
    const long levels[] = {1, 3, 4, 8, 12, 24};
    std::uniform_int_distribution<size_t> pick(0, 5);
    for (int i = 0; i < 60; ++i) {
        auto a = random_cyclo(rng, levels[pick(rng)]);
        auto b = random_cyclo(rng, levels[pick(rng)]);
        auto c = random_cyclo(rng, levels[pick(rng)]);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("inverses on 200 random nonzero values") {
    std::mt19937 rng(1234);
    const long levels[] = {1, 2, 3, 4, 6, 8, 12, 15, 16, 20, 24};
    std::uniform_int_distribution<size_t> pick(0, 10);
    int done = 0;
    while (done < 200) {
        auto a = random_cyclo(rng, levels[pick(rng)]);
        if (a.is_zero()) continue;
        CHECK(a.inverse() * a == CycloNumber(Rational(1)));
        ++done;
    }
    CHECK_THROWS_AS(CycloNumber(Rational(0)).inverse(), NonInvertible);
}

TEST_CASE("conjugation and embedding") {
    long bits = 128;
    // embed(zeta_4) = i
    auto i4 = zeta(4).embed(1, bits);
    CHECK(std::abs(i4.re.to_double()) < 1e-15);
    CHECK(std::abs(i4.im.to_double() - 1.0) < 1e-15);
    // embed(1 + 2 zeta_3) = i sqrt(3)
    auto v = (CycloNumber(Rational(1)) + zeta(3).scaled(Rational(2))).embed(1, bits);
    CHECK(std::abs(v.re.to_double()) < 1e-15);
    CHECK(std::abs(v.im.to_double() - std::sqrt(3.0)) < 1e-15);
    // embed of a rational is itself
    auto q = CycloNumber(make_rational(22, 7)).embed(1, bits);
    CHECK(std::abs(q.re.to_double() - 22.0 / 7.0) < 1e-15);
    CHECK(std::abs(q.im.to_double()) < 1e-15);

    // conj then embed = complex conjugate of embed
    std::mt19937 rng(99);
    for (int t = 0; t < 10; ++t) {
        auto a = random_cyclo(rng, 20);
        auto e1 = a.conjugate().embed(1, bits);
        auto e2 = a.embed(1, bits).conj();
        CHECK(std::abs(e1.re.to_double() - e2.re.to_double()) < 1e-20);
        CHECK(std::abs(e1.im.to_double() - e2.im.to_double()) < 1e-20);
    }

    // galois_apply permutes the embeddings: embed(sigma_k(a), j) = embed(a, jk)
    for (int t = 0; t < 6; ++t) {
        auto a = random_cyclo(rng, 15);
        for (long k : {2, 4, 7}) {
            auto lhs = a.galois_apply(k).embed(1, bits);
            auto rhs = a.embed(k, bits);
            CHECK(std::abs(lhs.re.to_double() - rhs.re.to_double()) < 1e-25);
            CHECK(std::abs(lhs.im.to_double() - rhs.im.to_double()) < 1e-25);
        }
    }
}

TEST_CASE("level changes") {
    // zeta_3 lifted to level 6 and back
    auto z3 = zeta(3);
    auto at6 = z3.at_level(6);
    CHECK(at6.level() == 6);
    CHECK(at6 == z3);
    CHECK(at6.at_level(3) == z3);
    CHECK(z3.min_level() == 3);
    CHECK(CycloNumber(Rational(5)).at_level(12).min_level() == 1);
    // sqrt(5) = zeta_5 + zeta_5^4 - zeta_5^2 - zeta_5^3 lives at level 5 minimally
    auto s5 = zeta(5, 1) + zeta(5, 4) - zeta(5, 2) - zeta(5, 3);
    CHECK(s5.min_level() == 5);
    CHECK_THROWS_AS(zeta(5).at_level(3), BadDescriptor);
}

TEST_CASE("modular resultant matches the remainder-sequence reference") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> entry(-20, 20);
    for (int t = 0; t < 30; ++t) {
        size_t da = 1 + rng() % 8, db = 1 + rng() % 8;
        std::vector<Integer> a(da + 1), b(db + 1);
        for (auto& c : a) c = entry(rng);
        for (auto& c : b) c = entry(rng);
        a.back() = 1 + (rng() % 5);
        b.back() = 1 + (rng() % 5);
        CHECK(polyz_resultant(a, b) == polyz_resultant_prs(a, b));
    }
    // classical value: Res(Phi_12, x - 1) = Phi_12(1) = 1
    std::vector<Integer> xm1{-1, 1};
    CHECK(polyz_resultant(cyclotomic_polynomial(12), xm1) == 1);
    CHECK(polyz_resultant(cyclotomic_polynomial(9), xm1) == 3);
}

TEST_CASE("norms") {
    // norm(1 + 2 zeta_3) = 3
    auto a = CycloNumber(Rational(1)) + zeta(3).scaled(Rational(2));
    CHECK(cyclo_norm(a) == Rational(3));
    // norm of a rational at level 1 is itself
    CHECK(cyclo_norm(CycloNumber(make_rational(-7, 2))) == make_rational(-7, 2));
    // multiplicativity
    std::mt19937 rng(5);
    for (int t = 0; t < 8; ++t) {
        auto x = random_cyclo(rng, 12);
        auto y = random_cyclo(rng, 12);
        if (x.is_zero() || y.is_zero()) continue;
        CHECK(cyclo_norm(x * y) == cyclo_norm(x) * cyclo_norm(y));
    }
}

TEST_CASE("valuations") {
    // a = 3 at p = 3, level 1
    auto v = cyclo_valuations(CycloNumber(Rational(3)), 3);
    REQUIRE(v.primes.size() == 1);
    CHECK(v.valuations[0] == 1);
    CHECK(v.primes[0].e == 1);
    CHECK(v.primes[0].f_deg == 1);

    // a = 1 + 2 zeta_3 at p = 3: valuation 1 at the unique ramified prime
    auto a = CycloNumber(Rational(1)) + zeta(3).scaled(Rational(2));
    auto v3 = cyclo_valuations(a, 3);
    REQUIRE(v3.primes.size() == 1);
    CHECK(v3.primes[0].e == 2);
    CHECK(v3.primes[0].f_deg == 1);
    CHECK(v3.valuations[0] == 1);

    // same a at p = 5: all zero
    auto v5 = cyclo_valuations(a, 5);
    for (long val : v5.valuations) CHECK(val == 0);

    // split prime: 5 splits in Q(i); valuations of 2+i and 2-i are disjoint
    auto b = CycloNumber(Rational(2)) + zeta(4);
    auto vb = cyclo_valuations(b, 5);
    REQUIRE(vb.primes.size() == 2);
    CHECK(vb.valuations[0] + vb.valuations[1] == 1);

    // sum of valuation * residue degree = v_p(norm)
    std::mt19937 rng(17);
    for (long level : {5L, 8L, 12L}) {
        for (long p : {2L, 3L, 5L, 7L}) {
            for (int t = 0; t < 3; ++t) {
                auto x = random_cyclo(rng, level);
                if (x.is_zero()) continue;
                auto vs = cyclo_valuations(x, p);
                long lhs = 0;
                for (size_t i = 0; i < vs.primes.size(); ++i)
                    lhs += vs.valuations[i] * vs.primes[i].f_deg;
                CHECK(lhs == rat_valuation(cyclo_norm(x), Integer(p)));
            }
        }
    }
    CHECK_THROWS_AS(cyclo_valuations(CycloNumber(Rational(0)), 3), ZeroValuation);
}

TEST_CASE("tv is additive and presentation independent") {
    auto a = CycloNumber(Rational(1)) + zeta(3).scaled(Rational(2));
    CHECK(cyclo_tv(a, 3) == make_rational(1, 2));
    CHECK(cyclo_tv(a.at_level(12), 3) == make_rational(1, 2));
    auto b = zeta(4) + CycloNumber(Rational(1));  // 1 + i, norm 2
    CHECK(cyclo_tv(b, 2) == make_rational(1, 2));
    CHECK(cyclo_tv(a * a, 3) == Rational(1));
}

TEST_CASE("galois sum of quadratic character mod 5 oracle") {
    // tau = zeta5 + zeta5^4 - zeta5^2 - zeta5^3; sigma_2(tau) = -tau
    auto tau = zeta(5, 1) + zeta(5, 4) - zeta(5, 2) - zeta(5, 3);
    CHECK(tau.galois_apply(2) == -tau);
    CHECK(tau * tau == CycloNumber(Rational(5)));
}
