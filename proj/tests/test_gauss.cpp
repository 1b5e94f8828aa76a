#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <doctest.h>

#include <cmath>
#include <random>

#include "galmod/errors.hpp"
#include "galmod/gauss.hpp"
#include "galmod/serialize.hpp"

#include <fstream>

using namespace galmod;

namespace {

CycloNumber zeta(long n, long k = 1) { return CycloNumber::root_of_unity(n, k); }

DirichletCharacter quadratic_mod(long p) {
    for (const auto& chi : primitive_characters_mod(p))
        if (chi.order() == 2) return chi;
    throw BadDescriptor("no quadratic character");
}

CharTable load_table(const char* name) {
    // fixtures are read relative to the source tree; the test runner sets
    // the working directory to the build tree, so walk up if needed
    for (const char* prefix : {"fixtures/", "../fixtures/", "../../fixtures/"}) {
        std::ifstream in(std::string(prefix) + name);
        if (in) {
            Json j = Json::parse(in);
            return chartable_from_json(j);
        }
    }
    throw BadDescriptor("fixture not found: " + std::string(name));
}

}  // namespace

TEST_CASE("dirichlet character plumbing") {
    auto chi3 = quadratic_mod(3);
    CHECK(chi3.conductor() == 3);
    CHECK(chi3.order() == 2);
    CHECK(chi3.parity() == -1);  // odd character
    CHECK(chi3.value(2) == CycloNumber(Rational(-1)));
    CHECK(chi3.value(3).is_zero());

    auto chi5 = quadratic_mod(5);
    CHECK(chi5.parity() == 1);  // even
    CHECK(chi5.value(2) == CycloNumber(Rational(-1)));
    CHECK(chi5.value(4) == CycloNumber(Rational(1)));

    // imprimitive character mod 6 induced from mod 3
    auto L6 = build_field(6, {});
    CHECK(L6.conductor() == 3);  // (Z/6)^x = (Z/3)^x

    // conductor computation through make_dirichlet on (Z/15)^x: the 8
    // characters split as 1 trivial, 1 of conductor 3, 3 of conductor 5,
    // 3 of conductor 15
    auto q15 = make_unit_quotient(15, {});
    int prim_count = 0;
    for (const auto& chi : characters_of(q15.group)) {
        auto d = make_dirichlet(15, chi.exponents);
        if (d.conductor() == 15) ++prim_count;
        CHECK((d.conductor() == 1 || d.conductor() == 3 || d.conductor() == 5 ||
               d.conductor() == 15));
    }
    CHECK(prim_count == 3);
}

TEST_CASE("gauss sum frozen values") {
    // trivial character: tau = 1
    auto x = make_dirichlet(1, {});
    CHECK(gauss_sum(x) == CycloNumber(Rational(1)));

    // quadratic mod 3: 1 + 2 zeta_3
    auto tau3 = gauss_sum(quadratic_mod(3));
    CHECK(tau3 == CycloNumber(Rational(1)) + zeta(3).scaled(Rational(2)));

    // quadratic mod 5: zeta + zeta^4 - zeta^2 - zeta^3
    auto tau5 = gauss_sum(quadratic_mod(5));
    CHECK(tau5 == zeta(5, 1) + zeta(5, 4) - zeta(5, 2) - zeta(5, 3));

    // imprimitive input is rejected
    auto q15 = make_unit_quotient(15, {});
    for (const auto& chi : characters_of(q15.group)) {
        auto d = make_dirichlet(15, chi.exponents);
        if (d.conductor() != 15) {
            CHECK_THROWS_AS(gauss_sum(d), NotPrimitive);
            break;
        }
    }
}

TEST_CASE("tau(chi) tau(chibar) = chi(-1) f") {
    for (long f : {3L, 4L, 5L, 7L, 8L, 9L, 11L, 12L, 13L, 15L, 16L}) {
        for (const auto& chi : primitive_characters_mod(f)) {
            CycloNumber lhs = gauss_sum(chi) * gauss_sum(chi.conj());
            CycloNumber rhs = CycloNumber(Rational(chi.parity() * f));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("twisted galois equivariance of gauss sums") {
    // sigma_k(tau(chi)) * chi^{sigma_k}(k) = tau(chi^{sigma_k}); the plain
    // rule sigma_k(tau) = conj(chi)(k) tau holds whenever chi^k = chi
    for (long f : {5L, 7L, 9L, 11L}) {
        for (const auto& chi : primitive_characters_mod(f)) {
            long m = chi.order();
            long N = lcm_ll(f, m);
            CycloNumber tau = gauss_sum(chi);
            for (long k = 1; k < N; ++k) {
                if (std::gcd(k, N) != 1) continue;
                // chi^k as a Dirichlet character: multiply k times
                DirichletCharacter chik = chi;
                for (long t = 1; t < ((k % m) + m) % m; ++t) chik = chik.mul(chi);
                if (k % m == 1 % m) {
                    // plain equivariance on the stabilizer
                    CHECK(tau.galois_apply(k) == chi.conj().value(k) * tau);
                }
                CycloNumber lhs = gauss_sum(chik.primitive_part());
                CycloNumber rhs = tau.galois_apply(k) * chik.value(k);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("absolute value of gauss sums") {
    for (long f : {3L, 4L, 5L, 7L, 8L, 11L, 13L}) {
        for (const auto& chi : primitive_characters_mod(f)) {
            auto tau = gauss_sum(chi);
            double a = tau.embed(1, 128).abs_double();
            CHECK(std::abs(a - std::sqrt(double(f))) < 1e-12);
        }
    }
}

TEST_CASE("w_infinity") {
    CHECK(w_infinity(1, 1) == CycloNumber(Rational(1)));
    CHECK(w_infinity(1, -1) == zeta(4, 3));   // i^{-1} = -i
    CHECK(w_infinity(2, -2) == CycloNumber(Rational(-1)));  // i^{-2}
    CHECK_THROWS_AS(w_infinity(1, 2), BadTrace);
    CHECK_THROWS_AS(w_infinity(2, 1), BadTrace);
}

TEST_CASE("epsilon constants") {
    CHECK(epsilon_constant(make_dirichlet(1, {})) == CycloNumber(Rational(1)));
    // odd quadratic mod 3: (i sqrt 3)(-i) = sqrt 3 > 0
    auto e3 = epsilon_constant(quadratic_mod(3));
    auto v3 = e3.embed(1, 128);
    CHECK(std::abs(v3.re.to_double() - std::sqrt(3.0)) < 1e-12);
    CHECK(std::abs(v3.im.to_double()) < 1e-12);
    // even quadratic mod 5: sqrt 5
    auto e5 = epsilon_constant(quadratic_mod(5));
    auto v5 = e5.embed(1, 128);
    CHECK(std::abs(v5.re.to_double() - std::sqrt(5.0)) < 1e-12);
    CHECK(std::abs(v5.im.to_double()) < 1e-12);
}

TEST_CASE("unramified characteristic") {
    auto chi3 = quadratic_mod(3);
    CHECK(unramified_characteristic(chi3, 5) == CycloNumber(Rational(1)));
    CHECK(unramified_characteristic(make_dirichlet(1, {}), 7) ==
          CycloNumber(Rational(1)));

    // quadratic mod 15 at p = 3: the mod-5 part at 3 is the Legendre
    // symbol (3|5) = -1
    DirichletCharacter chi15 = quadratic_mod(3).mul(quadratic_mod(5));
    CHECK(chi15.conductor() == 15);
    CHECK(unramified_characteristic(chi15, 3) == CycloNumber(Rational(-1)));
    // and at p = 5 the mod-3 part at 5: (5|3) = (2|3) = -1
    CHECK(unramified_characteristic(chi15, 5) == CycloNumber(Rational(-1)));

    // multiplicativity across coprime conductors
    std::mt19937 rng(3);
    auto c3 = primitive_characters_mod(9);
    auto c5 = primitive_characters_mod(5);
    for (const auto& a : c3)
        for (const auto& b : c5) {
            auto prod = a.mul(b);
            for (long p : {3L, 5L, 7L}) {
                CHECK(unramified_characteristic(prod, p) ==
                      unramified_characteristic(a, p) * unramified_characteristic(b, p));
            }
        }
}

TEST_CASE("symplectic characters of the fixture tables") {
    CharTable q8 = load_table("q8.json");
    auto symp = symplectic_characters(q8);
    REQUIRE(symp.size() == 1);
    CHECK(symp[0] == 4);
    CHECK(q8.degrees[symp[0]] == 2);

    CharTable d4 = load_table("d4.json");
    CHECK(symplectic_characters(d4).empty());

    // abelian tables have no symplectic rows: build C4's table inline
    CharTable c4;
    c4.name = "C4";
    c4.class_sizes = {1, 1, 1, 1};
    c4.degrees = {1, 1, 1, 1};
    c4.power_map_2 = {0, 2, 0, 2};  // classes 1, i, -1, -i
    for (long r = 0; r < 4; ++r) {
        std::vector<CycloNumber> row;
        for (long c = 0; c < 4; ++c) row.push_back(zeta(4, (r * c) % 4));
        c4.values.push_back(row);
    }
    CHECK(symplectic_characters(c4).empty());

    // trivial group
    CharTable triv;
    triv.name = "1";
    triv.class_sizes = {1};
    triv.degrees = {1};
    triv.power_map_2 = {0};
    triv.values = {{CycloNumber(Rational(1))}};
    CHECK(symplectic_characters(triv).empty());
}

TEST_CASE("pfaffian") {
    CharTable q8 = load_table("q8.json");
    // unramified place: exponent 0
    SupplementedRamData unram{{{1, {1, 1, 1, 1, 2}}}};
    CHECK(pfaffian(q8, unram, 4, 3) == CycloNumber(Rational(1)));

    // inertia = center: dim V^I = 0 on the 2-dim row
    SupplementedRamData center{{{1, {1, 1, 1, 1, 0}}}};
    for (long p : {3L, 5L, 7L}) {
        CHECK(pfaffian(q8, center, 4, p) == CycloNumber(Rational(-p)));
        SupplementedRamData f2{{{2, {1, 1, 1, 1, 0}}}};
        CHECK(pfaffian(q8, f2, 4, p) == CycloNumber(Rational(p * p)));
    }

    // half-integral exponent rejected
    SupplementedRamData bad{{{1, {1, 1, 1, 1, 1}}}};
    CHECK_THROWS_AS(pfaffian(q8, bad, 4, 3), NonIntegralExponent);

    // non-symplectic row rejected
    CHECK_THROWS_AS(pfaffian(q8, center, 0, 3), BadDescriptor);

    // integrality across random data on all symplectic rows
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> fdeg(1, 3), dim(0, 2);
    for (int t = 0; t < 50; ++t) {
        SupplementedRamData r{{{fdeg(rng), {1, 1, 1, 1, 2 * (dim(rng) / 2)}}}};
        long d = r.places[0].residue_degree * (2 - r.places[0].invariant_dims[4]);
        if (d % 2 == 0) {
            CHECK_NOTHROW(pfaffian(q8, r, 4, 3));
        } else {
            CHECK_THROWS_AS(pfaffian(q8, r, 4, 3), NonIntegralExponent);
        }
    }
}
