#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galmod/errors.hpp"
#include "galmod/serialize.hpp"

using namespace galmod;

TEST_CASE("cyclotomic round trip") {
    auto a = CycloNumber::root_of_unity(12, 5).scaled(make_rational(-7, 3)) +
             CycloNumber(make_rational(1, 2));
    Json j = cyclo_to_json(a);
    CHECK(cyclo_from_json(j) == a);
    // canonical string forms
    CHECK(rational_to_string(make_rational(4, 2)) == "2");
    CHECK(rational_to_string(make_rational(-3, 6)) == "-1/2");
    CHECK(rational_from_string("-1/2") == make_rational(-1, 2));
    CHECK_THROWS_AS(rational_from_string("x"), BadDescriptor);
}

TEST_CASE("field descriptor round trip") {
    auto L = build_field(15, {2});
    Json j = field_to_json(L);
    auto L2 = field_from_json(j);
    CHECK(L2.conductor() == L.conductor());
    CHECK(L2.kernel() == L.kernel());
}

TEST_CASE("relk round trip") {
    auto d = gauss_rep_of_field(build_field(15, {2}));
    Json j = relk_to_json(d);
    auto d2 = relk_from_json(j);
    CHECK(d2.group() == d.group());
    CHECK(d2.global() == d.global());
    CHECK(d2.finite().local.size() == d.finite().local.size());
    for (const auto& [p, fn] : d.finite().local) CHECK(d2.finite().local.at(p) == fn);
}

TEST_CASE("torsor round trip") {
    FinAbGroup c2({2});
    auto T = make_torsor(c2, 5, {{2, {1}}});
    Json j = torsor_to_json(T);
    auto T2 = torsor_from_json(j);
    CHECK(T2.level == 5);
    for (const auto& [u, g] : T.hom) CHECK(T2.hom.at(u) == g);
}

TEST_CASE("group algebra round trip") {
    FinAbGroup c4({4});
    std::vector<CycloNumber> cs{CycloNumber(Rational(1)), CycloNumber::root_of_unity(8, 3),
                                CycloNumber(), CycloNumber(make_rational(2, 5))};
    GroupAlgebraElement a(c4, cs);
    auto a2 = ga_from_json(ga_to_json(a));
    CHECK(a2 == a);
}

TEST_CASE("bad descriptors are rejected") {
    CHECK_THROWS_AS(cyclo_from_json(Json{{"level", 3}}), BadDescriptor);
    CHECK_THROWS_AS(field_from_json(Json{{"kernel_generators", Json::array()}}),
                    BadDescriptor);
    Json t{{"gamma", {2}}, {"level", 4}, {"hom", {{3, {1}}, {3, {0}}}}};
    CHECK_THROWS_AS(torsor_from_json(t), BadDescriptor);
}
