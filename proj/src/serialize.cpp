#include "galmod/serialize.hpp"

#include "galmod/errors.hpp"

namespace galmod {

namespace {

std::vector<long> longs_from_json(const Json& j) {
    if (!j.is_array()) throw BadDescriptor("expected an integer array");
    std::vector<long> out;
    for (const auto& x : j) out.push_back(x.get<long>());
    return out;
}

}  // namespace

Json cyclo_to_json(const CycloNumber& a) {
    Json coeffs = Json::array();
    for (const auto& c : a.coeffs()) coeffs.push_back(rational_to_string(c));
    return Json{{"level", a.level()}, {"coeffs", coeffs}};
}

CycloNumber cyclo_from_json(const Json& j) {
    if (!j.contains("level") || !j.contains("coeffs"))
        throw BadDescriptor("cyclotomic value needs level and coeffs");
    long level = j.at("level").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(rational_from_string(s.get<std::string>()));
    return CycloNumber(level, std::move(coeffs));
}

Json charfn_to_json(const CharFn& f) {
    Json out = Json::array();
    auto chars = characters_of(f.group());
    for (size_t i = 0; i < chars.size(); ++i) {
        out.push_back(Json{{"character", chars[i].exponents},
                           {"value", cyclo_to_json(f.values()[i])}});
    }
    return out;
}

CharFn charfn_from_json(const FinAbGroup& g, const Json& j) {
    if (!j.is_array()) throw BadDescriptor("character function must be an array");
    auto chars = characters_of(g);
    if (j.size() != chars.size())
        throw BadDescriptor("character function must list every character once");
    std::vector<CycloNumber> values(chars.size());
    std::vector<bool> seen(chars.size(), false);
    for (const auto& entry : j) {
        Character chi(g, longs_from_json(entry.at("character")));
        long idx = 0;
        for (size_t i = 0; i < chars.size(); ++i)
            if (chars[i] == chi) {
                idx = static_cast<long>(i);
                break;
            }
        if (seen[idx]) throw BadDescriptor("duplicate character in function");
        seen[idx] = true;
        values[idx] = cyclo_from_json(entry.at("value"));
    }
    return CharFn(g, std::move(values));
}

Json field_to_json(const AbelianField& L) {
    return Json{{"conductor", L.conductor()}, {"kernel_generators", L.kernel()}};
}

AbelianField field_from_json(const Json& j) {
    if (!j.contains("conductor"))
        throw BadDescriptor("field descriptor needs a conductor");
    std::vector<long> gens;
    if (j.contains("kernel_generators")) gens = longs_from_json(j.at("kernel_generators"));
    return build_field(j.at("conductor").get<long>(), gens);
}

Json relk_to_json(const RelKRep& r) {
    Json fin = Json::object();
    for (const auto& [p, fn] : r.finite().local) fin[std::to_string(p)] = charfn_to_json(fn);
    return Json{{"group", r.group().invariant_factors()},
                {"finite", fin},
                {"global", charfn_to_json(r.global())},
                {"kbar_normalized", r.kbar_normalized()}};
}

RelKRep relk_from_json(const Json& j) {
    FinAbGroup g(longs_from_json(j.at("group")));
    IdelicCharFn fin{g, {}};
    if (j.contains("finite"))
        for (const auto& [key, val] : j.at("finite").items())
            fin.local.emplace(std::stol(key), charfn_from_json(g, val));
    CharFn global = charfn_from_json(g, j.at("global"));
    bool norm = j.value("kbar_normalized", false);
    return RelKRep(std::move(fin), std::move(global), norm);
}

Json torsor_to_json(const TorsorDescriptor& t) {
    Json hom = Json::array();
    for (const auto& [u, g] : t.hom) hom.push_back(Json::array({u, g.exponents}));
    return Json{{"gamma", t.gamma.invariant_factors()}, {"level", t.level}, {"hom", hom}};
}

TorsorDescriptor torsor_from_json(const Json& j) {
    FinAbGroup gamma(longs_from_json(j.at("gamma")));
    long level = j.at("level").get<long>();
    std::vector<std::pair<long, std::vector<long>>> pairs;
    for (const auto& entry : j.at("hom"))
        pairs.emplace_back(entry.at(0).get<long>(), longs_from_json(entry.at(1)));
    return make_torsor(gamma, level, pairs);
}

Json ga_to_json(const GroupAlgebraElement& a) {
    Json coeffs = Json::array();
    auto elems = elements_of(a.group());
    for (size_t i = 0; i < elems.size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        coeffs.push_back(Json::array({elems[i].exponents, cyclo_to_json(a.coeffs()[i])}));
    }
    return Json{{"gamma", a.group().invariant_factors()},
                {"level", a.ambient_level()},
                {"coeffs", coeffs}};
}

GroupAlgebraElement ga_from_json(const Json& j) {
    FinAbGroup gamma(longs_from_json(j.at("gamma")));
    std::vector<CycloNumber> coeffs(gamma.order());
    auto elems = elements_of(gamma);
    for (const auto& entry : j.at("coeffs")) {
        GroupElement g(gamma, longs_from_json(entry.at(0)));
        CycloNumber v = cyclo_from_json(entry.at(1));
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == g) coeffs[i] = std::move(v);
    }
    return GroupAlgebraElement(gamma, std::move(coeffs));
}

Json chartable_to_json(const CharTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.values) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(cyclo_to_json(v));
        rows.push_back(r);
    }
    return Json{{"name", t.name},
                {"class_sizes", t.class_sizes},
                {"degrees", t.degrees},
                {"power_map_2", t.power_map_2},
                {"values", rows}};
}

CharTable chartable_from_json(const Json& j) {
    CharTable t;
    t.name = j.value("name", "");
    t.class_sizes = longs_from_json(j.at("class_sizes"));
    t.degrees = longs_from_json(j.at("degrees"));
    t.power_map_2 = longs_from_json(j.at("power_map_2"));
    for (const auto& row : j.at("values")) {
        std::vector<CycloNumber> r;
        for (const auto& v : row) r.push_back(cyclo_from_json(v));
        t.values.push_back(std::move(r));
    }
    t.validate();
    return t;
}

Json ramdata_to_json(const SupplementedRamData& r) {
    Json places = Json::array();
    for (const auto& pl : r.places)
        places.push_back(Json{{"residue_degree", pl.residue_degree},
                              {"invariant_dims", pl.invariant_dims}});
    return Json{{"places", places}};
}

SupplementedRamData ramdata_from_json(const Json& j) {
    SupplementedRamData out;
    for (const auto& pl : j.at("places")) {
        SupplementedRamData::Place place;
        place.residue_degree = pl.at("residue_degree").get<long>();
        place.invariant_dims = longs_from_json(pl.at("invariant_dims"));
        out.places.push_back(std::move(place));
    }
    return out;
}

Json torsion_to_json(const TorsionModule& t) {
    Json inv = Json::array();
    for (const auto& d : t.invariant_factors) inv.push_back(d.get_str());
    Json per = Json::object();
    for (const auto& [p, pe] : t.per_prime_orders) per[std::to_string(p)] = pe.get_str();
    return Json{{"invariant_factors", inv}, {"order", t.order.get_str()}, {"per_prime", per}};
}

Json cht_to_json(const ChtReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.primes)
        rows.push_back(Json{{"p", row.p},
                            {"lhs", row.lhs.get_str()},
                            {"rhs", rational_to_string(row.rhs)},
                            {"equal", row.equal}});
    return Json{{"per_prime", rows}, {"ok", r.ok}};
}

std::string bigfloat_to_string(const BigFloat& x) { return x.to_string(30); }

}  // namespace galmod
