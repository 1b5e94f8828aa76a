// Batch front end: parse descriptors, run computations, emit reports.
// Exit codes: 0 all verdicts pass, 2 a verdict failed, 1 input or domain
// error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>

#include "galmod/cyclo_valuation.hpp"
#include "galmod/serialize.hpp"

using namespace galmod;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadDescriptor("cannot open " + path);
    return Json::parse(in);
}

std::string resolve_fixture(const std::string& name) {
    std::ifstream direct(name);
    if (direct) return name;
    if (const char* env = std::getenv("GALMOD_FIXTURES")) {
        std::string p = std::string(env) + "/" + name;
        if (std::ifstream(p)) return p;
    }
    std::string local = "fixtures/" + name;
    if (std::ifstream(local)) return local;
    throw BadDescriptor("cannot locate fixture " + name);
}

struct Verdict {
    std::string name;
    bool pass;
    std::string detail;
};

Json verdicts_to_json(const std::vector<Verdict>& vs) {
    Json out = Json::array();
    for (const auto& v : vs)
        out.push_back(Json{{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    return out;
}

bool all_pass(const std::vector<Verdict>& vs) {
    for (const auto& v : vs)
        if (!v.pass) return false;
    return true;
}

Json make_report(const Json& command_echo, long precision_bits, Json results,
                 const std::vector<Verdict>& verdicts) {
    return Json{{"version", kVersion},
                {"command", command_echo},
                {"precision_bits", precision_bits},
                {"timestamp", iso_timestamp()},
                {"results", std::move(results)},
                {"verdicts", verdicts_to_json(verdicts)}};
}

void emit(const Json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << std::endl;
    } else {
        std::ofstream out(out_path);
        if (!out) throw BadDescriptor("cannot write " + out_path);
        out << report.dump(2) << std::endl;
    }
}

// ---- per-command result builders (also reused by sweep) ----

Json field_results(const AbelianField& L, std::vector<Verdict>& verdicts) {
    Json ram = Json::object();
    long pmax = std::max<long>(20, L.conductor());
    bool efg_ok = true;
    for (long p : primes_up_to(pmax)) {
        auto r = L.ramification_data(p);
        Json inertia = Json::array();
        for (const auto& g : r.inertia) inertia.push_back(g.exponents);
        ram[std::to_string(p)] = Json{{"e", r.e},
                                      {"f", r.f_deg},
                                      {"g", r.g},
                                      {"frobenius", r.frobenius_class.exponents},
                                      {"inertia", inertia}};
        if (r.e * r.f_deg * r.g != L.degree()) efg_ok = false;
    }
    verdicts.push_back({"ramification-degree-product", efg_ok, "e*f*g = [L:Q] at all p"});

    Json out{{"descriptor", field_to_json(L)},
             {"degree", L.degree()},
             {"galois_invariant_factors", L.galois_group().invariant_factors()},
             {"discriminant", L.discriminant().get_str()},
             {"tame", L.tame()},
             {"ramification", ram}};
    if (L.tame()) {
        auto alpha = L.nib_generator();
        out["nib_generator"] = cyclo_to_json(alpha);
        verdicts.push_back({"nib-verified", true,
                            "orbit is an integral basis; resolvents nonzero"});
    }
    return out;
}

Json gauss_results(const DirichletCharacter& chi, long bits, std::vector<Verdict>& verdicts) {
    if (!chi.is_primitive()) throw NotPrimitive("character is not primitive");
    CycloNumber tau = gauss_sum(chi);
    long f = chi.conductor();

    CycloNumber prod = tau * gauss_sum(chi.conj());
    bool norm_ok = (prod == CycloNumber(Rational(chi.parity() * f)));
    verdicts.push_back({"tau-conjugate-product", norm_ok, "tau(chi) tau(bar chi) = chi(-1) f"});

    double abs_tau = tau.embed(1, bits).abs().to_double();
    bool abs_ok = std::abs(abs_tau - std::sqrt(double(f))) < 1e-12;
    verdicts.push_back({"tau-absolute-value", abs_ok, "|tau| = sqrt(f) within 1e-12"});

    return Json{{"conductor", f},
                {"order", chi.order()},
                {"parity", chi.parity()},
                {"tau", cyclo_to_json(tau)},
                {"tau_abs", tau.embed(1, bits).abs().to_string(25)},
                {"epsilon", cyclo_to_json(epsilon_constant(chi))}};
}

Json delta_results(const AbelianField& L, long bits, std::vector<Verdict>& verdicts) {
    RelKRep d = delta_rep_of_field(L);
    RelKRep g = gauss_rep_of_field(L);
    RelKRep diff = d.diff(g);

    Json projections = Json::object();
    bool thm_ok = true;
    auto primes = primes_up_to(std::max<long>(2, L.conductor()));
    auto td_all = totval_table(d, primes);
    auto tg_all = totval_table(g, primes);
    for (size_t pi = 0; pi < primes.size(); ++pi) {
        Json col = Json::array();
        for (size_t i = 0; i < td_all[pi].size(); ++i) {
            col.push_back(Json{{"delta", rational_to_string(td_all[pi][i])},
                               {"gauss", rational_to_string(tg_all[pi][i])}});
            if (td_all[pi][i] != tg_all[pi][i]) thm_ok = false;
        }
        projections[std::to_string(primes[pi])] = col;
    }
    verdicts.push_back({"valuation-match", thm_ok,
                        "delta and gauss representatives share all total valuations"});

    Json arch = Json::array();
    auto pa = arch_profile(d, bits);
    for (const auto& x : pa) arch.push_back(x.to_string(25));

    return Json{{"delta", relk_to_json(d)},
                {"gauss", relk_to_json(g)},
                {"difference", relk_to_json(diff)},
                {"projections", projections},
                {"arch_profile", arch}};
}

Json acrep_results(const AbelianField& L, long bits, std::vector<Verdict>& verdicts) {
    long n = L.degree();
    auto hecke = metrised_class(L, MetricKind::hecke, bits);
    auto standard = metrised_class(L, MetricKind::standard, bits);
    auto ac = to_arith_class(delta_rep_of_field(L), bits);

    // Gauss side for the comparison
    auto chars = L.characters();
    bool cor_ok = true, shadow_ok = true;
    Json rows = Json::array();
    for (size_t i = 0; i < chars.size(); ++i) {
        auto chi = dirichlet_from_field_character(L, chars[i]).primitive_part();
        double tau_abs = gauss_sum(chi).embed(1, bits).abs().to_double();
        double want = tau_abs * std::sqrt(double(n));
        double have = hecke.arch[i].to_double();
        if (std::abs(have - want) > 1e-10) cor_ok = false;
        double quotient = have / standard.arch[i].to_double();
        if (std::abs(ac.arch[i].to_double() - quotient) > 1e-10) shadow_ok = false;
        rows.push_back(Json{{"hecke", hecke.arch[i].to_string(25)},
                            {"standard", standard.arch[i].to_string(25)},
                            {"boundary", ac.arch[i].to_string(25)}});
    }
    verdicts.push_back({"hecke-matches-gauss", cor_ok,
                        "hecke arch equals |tau| sqrt(n) within 1e-10"});
    verdicts.push_back({"boundary-quotient", shadow_ok,
                        "boundary arch equals hecke/standard within 1e-10"});
    return Json{{"arch", rows}};
}

Json chase_results(const AbelianField& L, std::vector<Verdict>& verdicts) {
    TorsionModule t = chase_cokernel(L);
    ChtReport cht = cht_check(L);

    Integer expect = 1;
    Integer d = L.discriminant();
    long n = L.degree();
    bool order_ok;
    if (n % 2 == 0) {
        for (long i = 0; i < n / 2; ++i) expect *= d;
        order_ok = (t.order == expect);
    } else {
        Integer sq = t.order * t.order, dn = 1;
        for (long i = 0; i < n; ++i) dn *= d;
        order_ok = (sq == dn);
    }
    verdicts.push_back({"cokernel-order", order_ok, "|Cok psi| = |d_L|^{n/2}"});
    verdicts.push_back({"cht-consistency", cht.ok,
                        "v_p of the cokernel order matches the class valuations"});

    Json out = torsion_to_json(t);
    out["cht"] = cht_to_json(cht);
    return out;
}

Json resolvend_results(const TorsorDescriptor& T, std::vector<Verdict>& verdicts) {
    auto r = resolvend_of_torsor(T);
    auto red = reduce_resolvend(r);
    auto hm = h_membership(r);
    verdicts.push_back({"resolvend-h-membership", hm.member,
                        "resolvend satisfies the twisted-fixedness law"});
    Json cocycle = Json::object();
    for (const auto& [k, g] : hm.cocycle) cocycle[std::to_string(k)] = g.exponents;
    Json transforms = Json::array();
    for (const auto& t : r.transform_all()) transforms.push_back(cyclo_to_json(t));
    return Json{{"resolvend", ga_to_json(r)},
                {"reduced", ga_to_json(red.element)},
                {"transforms", transforms},
                {"cocycle", cocycle}};
}

Json primitive_results(const GroupAlgebraElement& a, std::vector<Verdict>& verdicts) {
    auto hm = h_membership(a);
    bool prim = primitivity_test(a);
    verdicts.push_back({"membership-primitivity-agreement", hm.member == prim,
                        "the two characterizations agree"});
    return Json{{"element", ga_to_json(a)},
                {"h_membership", hm.member},
                {"primitive", prim}};
}

Json pfaffian_results(const CharTable& table, const SupplementedRamData& ram, long p,
                      std::vector<Verdict>& verdicts) {
    auto symp = symplectic_characters(table);
    Json rows = Json::array();
    bool integral_ok = true;
    for (size_t idx : symp) {
        try {
            CycloNumber v = pfaffian(table, ram, idx, p);
            rows.push_back(Json{{"row", idx}, {"value", cyclo_to_json(v)}});
        } catch (const NonIntegralExponent&) {
            integral_ok = false;
            rows.push_back(Json{{"row", idx}, {"error", "NonIntegralExponent"}});
        }
    }
    verdicts.push_back({"pfaffian-exponent-integral", integral_ok,
                        "all symplectic exponents are integral"});
    Json symp_json = Json::array();
    for (size_t s : symp) symp_json.push_back(s);
    return Json{{"symplectic_rows", symp_json}, {"values", rows}, {"p", p}};
}

struct SweepRow {
    Json entry;
    bool pass;
};

Json sweep_results(const std::string& sub, long max_conductor, long max_degree, long bits,
                   std::vector<Verdict>& verdicts) {
    auto fields = enumerate_tame_fields(max_conductor, max_degree);
    std::vector<std::future<SweepRow>> futures;
    for (const auto& L : fields) {
        futures.push_back(std::async(std::launch::async, [&sub, L, bits]() {
            std::vector<Verdict> local;
            Json results;
            if (sub == "delta")
                results = delta_results(L, bits, local);
            else if (sub == "chase")
                results = chase_results(L, local);
            else if (sub == "acrep")
                results = acrep_results(L, bits, local);
            else
                results = field_results(L, local);
            return SweepRow{Json{{"field", field_to_json(L)},
                                 {"results", std::move(results)},
                                 {"verdicts", verdicts_to_json(local)}},
                            all_pass(local)};
        }));
    }
    Json rows = Json::array();
    bool ok = true;
    for (auto& f : futures) {
        SweepRow row = f.get();
        ok = ok && row.pass;
        rows.push_back(std::move(row.entry));
    }
    verdicts.push_back({"sweep-all-fields", ok, std::to_string(fields.size()) + " fields"});
    return Json{{"count", fields.size()}, {"fields", rows}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois-module invariant calculator for tame abelian fields"};
    app.require_subcommand(1);

    long precision_bits = 128;
    std::string out_path;
    app.add_option("--precision-bits", precision_bits, "working embedding precision")
        ->check(CLI::Range(53L, 4096L));
    app.add_option("--out", out_path, "write the report to a file");

    std::string input_path, table_path, ram_path, sweep_command = "delta";
    long modulus = 1, prime = 3, max_conductor = 20, max_degree = 4;
    std::vector<long> exponents;
    bool use_torsor = false;

    auto* c_field = app.add_subcommand("field", "field invariants and ramification");
    c_field->add_option("--input", input_path, "field descriptor JSON")->required();

    auto* c_gauss = app.add_subcommand("gauss", "Gauss sum of a primitive character");
    c_gauss->add_option("--modulus", modulus, "character modulus")->required();
    c_gauss->add_option("--exponents", exponents, "dual coordinates on (Z/m)^x");

    auto* c_delta = app.add_subcommand("delta", "discriminant vs Gauss representatives");
    c_delta->add_option("--input", input_path, "field descriptor JSON")->required();

    auto* c_acrep = app.add_subcommand("acrep", "arithmetic class representatives");
    c_acrep->add_option("--input", input_path, "field descriptor JSON")->required();

    auto* c_chase = app.add_subcommand("chase", "Chase torsion module");
    c_chase->add_option("--input", input_path, "field descriptor JSON")->required();

    auto* c_res = app.add_subcommand("resolvend", "torsor resolvend data");
    c_res->add_option("--input", input_path, "torsor descriptor JSON")->required();

    auto* c_prim = app.add_subcommand("primitive", "primitivity / membership test");
    c_prim->add_option("--input", input_path, "group algebra element JSON")->required();
    c_prim->add_flag("--torsor", use_torsor, "treat the input as a torsor descriptor");

    auto* c_pf = app.add_subcommand("pfaffian", "Pfaffian idele values");
    c_pf->add_option("--table", table_path, "character table JSON")->required();
    c_pf->add_option("--ram", ram_path, "ramification data JSON")->required();
    c_pf->add_option("--p", prime, "rational prime")->required();

    auto* c_sweep = app.add_subcommand("sweep", "run a command over all tame fields");
    c_sweep->add_option("--command", sweep_command, "field|delta|chase|acrep");
    c_sweep->add_option("--max-conductor", max_conductor, "conductor bound");
    c_sweep->add_option("--max-degree", max_degree, "degree bound");

    CLI11_PARSE(app, argc, argv);

    Json echo;
    for (int i = 1; i < argc; ++i) echo.push_back(argv[i]);

    try {
        std::vector<Verdict> verdicts;
        Json results;
        if (*c_field) {
            results = field_results(field_from_json(load_json_file(input_path)), verdicts);
        } else if (*c_gauss) {
            results = gauss_results(make_dirichlet(modulus, exponents), precision_bits,
                                    verdicts);
        } else if (*c_delta) {
            results = delta_results(field_from_json(load_json_file(input_path)),
                                    precision_bits, verdicts);
        } else if (*c_acrep) {
            results = acrep_results(field_from_json(load_json_file(input_path)),
                                    precision_bits, verdicts);
        } else if (*c_chase) {
            results = chase_results(field_from_json(load_json_file(input_path)), verdicts);
        } else if (*c_res) {
            results = resolvend_results(torsor_from_json(load_json_file(input_path)),
                                        verdicts);
        } else if (*c_prim) {
            Json j = load_json_file(input_path);
            GroupAlgebraElement a = use_torsor
                                        ? resolvend_of_torsor(torsor_from_json(j))
                                        : ga_from_json(j);
            results = primitive_results(a, verdicts);
        } else if (*c_pf) {
            CharTable table = chartable_from_json(load_json_file(resolve_fixture(table_path)));
            SupplementedRamData ram = ramdata_from_json(load_json_file(resolve_fixture(ram_path)));
            results = pfaffian_results(table, ram, prime, verdicts);
        } else if (*c_sweep) {
            results = sweep_results(sweep_command, max_conductor, max_degree,
                                    precision_bits, verdicts);
        }
        Json report = make_report(echo, precision_bits, std::move(results), verdicts);
        emit(report, out_path);
        return all_pass(verdicts) ? 0 : 2;
    } catch (const Error& e) {
        Json report{{"version", kVersion},
                    {"command", echo},
                    {"timestamp", iso_timestamp()},
                    {"error", {{"code", e.code()}, {"message", e.what()}}}};
        emit(report, out_path);
        return 1;
    } catch (const Json::exception& e) {
        Json report{{"version", kVersion},
                    {"command", echo},
                    {"timestamp", iso_timestamp()},
                    {"error", {{"code", "BadDescriptor"}, {"message", e.what()}}}};
        emit(report, out_path);
        return 1;
    }
}
