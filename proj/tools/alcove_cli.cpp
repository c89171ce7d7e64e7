// Command-line front end: exact extended-affine-Weyl calculus, localized classes,
// oracle tables, cycle reconstruction and the verifiers, with stable JSON output.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "alcove/json_io.hpp"

using namespace alcove;

namespace {

/// Parsed run configuration; round-trips to canonical JSON.
struct RunConfig {
    std::string datum;
    long long p = 0;
    std::string zeta;
    std::string oracle;  // "rank1" or a table path
    std::string region = "default";
    std::string format = "json";
    int verbosity = 0;

    json to_json() const {
        return json{{"datum", datum},   {"p", p},           {"zeta", zeta},
                    {"oracle", oracle}, {"region", region}, {"format", format},
                    {"verbosity", verbosity}};
    }
    static RunConfig from_json(const json& j) {
        RunConfig c;
        c.datum = j.at("datum").get<std::string>();
        c.p = j.at("p").get<long long>();
        c.zeta = j.at("zeta").get<std::string>();
        c.oracle = j.at("oracle").get<std::string>();
        c.region = j.at("region").get<std::string>();
        c.format = j.at("format").get<std::string>();
        c.verbosity = j.at("verbosity").get<int>();
        return c;
    }
};

IVec parse_ivec(const std::string& s) {
    IVec out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::stoll(cur));
    return out;
}

RootDatum load_datum(const std::string& spec) {
    if (spec.find(".json") != std::string::npos) {
        std::ifstream in(spec);
        check(in.good(), errc::usage, "cannot open datum file " + spec);
        json j = json::parse(in);
        return root_datum_from_json(j);
    }
    return build_root_datum(spec);
}

/// --zeta accepts a full coordinate vector or a short form padded with zeros.
CentralChar parse_zeta(const RootDatum& d, const std::string& s) {
    IVec v = parse_ivec(s);
    check(v.size() <= d.rank(), errc::usage, "zeta vector longer than the rank");
    v.resize(d.rank(), 0);
    return central_char(d, aw_translation(d, v));
}

FinWeyl parse_w(const RootDatum& d, const std::string& s) {
    if (s.empty() || s == "e") return d.w_identity();
    if (s == "w0") return d.w_longest();
    FinWeyl w = d.w_identity();
    for (long long i : parse_ivec(s)) {
        check(i >= 0 && static_cast<size_t>(i) < d.ss_rank(), errc::usage,
              "simple reflection index out of range");
        w = d.w_mult(w, d.simple_reflection(static_cast<size_t>(i)));
    }
    return w;
}

void emit(const json& j, const std::string& out_path) {
    std::string text = dump_canonical(j);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        check(out.good(), errc::usage, "cannot open output file " + out_path);
        out << text;
    }
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    check(in.good(), errc::usage, "cannot open input file " + path);
    return json::parse(in);
}

std::string elt_text([[maybe_unused]] const RootDatum& d, const ExtAffWeyl& a) {
    std::string w = a.fin.word.empty() ? "e" : "";
    for (size_t i = 0; i < a.fin.word.size(); ++i)
        w += (i ? "." : "") + std::string("s") + std::to_string(a.fin.word[i]);
    std::string nu = "(";
    for (size_t i = 0; i < a.trans.size(); ++i)
        nu += (i ? "," : "") + std::to_string(a.trans[i]);
    nu += ")";
    return w + " t^" + nu;
}

int run(int argc, char** argv) {
    CLI::App app{"exact calculus for extended affine Weyl groups, localized classes "
                 "and Breuil-Mezard cycle reconstruction"};
    app.require_subcommand(1);

    std::string datum_spec, out_path, in_path, format = "json";
    std::string lambda_s, mu_s, nu_s, w_s, zeta_s = "0", class_path;
    long long p = 0, m = 0;
    long long max_elements = 100000;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--datum", datum_spec, "preset name or JSON file")->required();
        sub->add_option("--out", out_path, "output file (default stdout)");
        sub->add_option("--format", format, "json or table");
    };

    // adm
    bool flag_regular = false, flag_translations = false;
    auto* adm_cmd = app.add_subcommand("adm", "admissible set of a dominant weight");
    add_common(adm_cmd);
    adm_cmd->add_option("--lambda", lambda_s, "dominant weight")->required();
    adm_cmd->add_flag("--regular", flag_regular, "regular elements only");
    adm_cmd->add_flag("--translations", flag_translations, "translation elements only");
    adm_cmd->add_option("--max-elements", max_elements, "enumeration cap");

    // genericity
    auto* gen_cmd = app.add_subcommand("genericity", "m-genericity of a weight");
    add_common(gen_cmd);
    gen_cmd->add_option("--lambda", lambda_s)->required();
    gen_cmd->add_option("--p", p)->required();
    gen_cmd->add_option("--m", m)->required();

    // weights
    bool flag_identity_check = false;
    auto* wts_cmd = app.add_subcommand("weights", "Weyl module weight multiplicities");
    add_common(wts_cmd);
    wts_cmd->add_option("--lambda", lambda_s)->required();
    wts_cmd->add_flag("--identity-check", flag_identity_check,
                      "also run the Weyl character identity");

    // localize
    std::string class_name;
    auto* loc_cmd = app.add_subcommand("localize", "standard localized classes");
    add_common(loc_cmd);
    loc_cmd->add_option("--class", class_name, "flag | rho-limit | lambda")->required();
    loc_cmd->add_option("--lambda", lambda_s, "for --class lambda");

    // oracle
    std::string validate_path;
    auto* orc_cmd = app.add_subcommand("oracle", "build or validate multiplicity tables");
    add_common(orc_cmd);
    orc_cmd->add_option("--p", p);
    orc_cmd->add_option("--validate", validate_path, "table file to validate");

    // reconstruct
    std::string report_path, region_s = "default", oracle_path;
    auto* rec_cmd = app.add_subcommand("reconstruct", "reconstruct the cycle table");
    add_common(rec_cmd);
    rec_cmd->add_option("--p", p)->required();
    rec_cmd->add_option("--zeta", zeta_s, "central character as t^nu (comma ints)");
    rec_cmd->add_option("--region", region_s, "default");
    rec_cmd->add_option("--report", report_path, "verification report output");
    rec_cmd->add_option("--oracle", oracle_path, "multiplicity table file (higher rank)");

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "run a named verifier");
    std::string verifier;
    ver_cmd->add_option("what", verifier, "recognition | residues | weyl | bm | bm-ht")
        ->required();
    ver_cmd->add_option("--datum", datum_spec)->required();
    ver_cmd->add_option("--class", class_path, "GKM class file");
    ver_cmd->add_option("--lambda", lambda_s);
    ver_cmd->add_option("--mu", mu_s);
    ver_cmd->add_option("--w", w_s);
    ver_cmd->add_option("--p", p);
    ver_cmd->add_option("--zeta", zeta_s);
    ver_cmd->add_option("--in", in_path, "cycle table file");
    ver_cmd->add_option("--out", out_path);
    ver_cmd->add_option("--oracle", oracle_path, "multiplicity table file (higher rank)");

    // factor
    auto* fac_cmd = app.add_subcommand("factor", "regular factorization u = v^{-1} w0 w1");
    add_common(fac_cmd);
    fac_cmd->add_option("--w", w_s, "finite part as word, e.g. 0,1");
    fac_cmd->add_option("--nu", nu_s, "translation part")->required();

    // present
    auto* pre_cmd = app.add_subcommand("present", "tame presentation data");
    add_common(pre_cmd);
    pre_cmd->add_option("--p", p)->required();
    pre_cmd->add_option("--mu", mu_s)->required();
    pre_cmd->add_option("--w", w_s);

    CLI11_PARSE(app, argc, argv);

    if (adm_cmd->parsed()) {
        RootDatum d = load_datum(datum_spec);
        Weight lam = parse_ivec(lambda_s);
        auto elems = adm(d, lam);
        check(elems.size() <= static_cast<size_t>(max_elements), errc::usage,
              "enumeration exceeds --max-elements");
        std::vector<ExtAffWeyl> kept;
        for (const auto& a : elems) {
            if (flag_regular && !is_regular(d, a)) continue;
            if (flag_translations && !(a.fin == d.w_identity())) continue;
            kept.push_back(a);
        }
        std::sort(kept.begin(), kept.end(),
                  [&](const ExtAffWeyl& a, const ExtAffWeyl& b) { return canonical_less(d, a, b); });
        if (format == "table") {
            for (const auto& a : kept)
                std::cout << elt_text(d, a) << "  len=" << aw_length(d, a) << "\n";
            std::cout << kept.size() << " elements\n";
            return 0;
        }
        json arr = json::array();
        for (const auto& a : kept) {
            json e = to_json(d, a);
            e["length"] = aw_length(d, a);
            arr.push_back(e);
        }
        emit(json{{"count", kept.size()}, {"elements", arr}}, out_path);
        return 0;
    }

    if (gen_cmd->parsed()) {
        RootDatum d = load_datum(datum_spec);
        bool ok = is_m_generic(d, parse_ivec(lambda_s), p, m);
        emit(json{{"generic", ok}, {"m", m}, {"p", p}}, out_path);
        return ok ? 0 : 1;
    }

    if (wts_cmd->parsed()) {
        RootDatum d = load_datum(datum_spec);
        Weight lam = parse_ivec(lambda_s);
        CharacterQ ch = weight_multiplicities(d, lam);
        json terms = json::array();
        for (const auto& [mu2, c] : ch.terms())
            terms.push_back(json{{"weight", to_json(mu2)}, {"mult", c}});
        json out{{"dimension", ch.total()}, {"terms", terms}};
        if (flag_identity_check) out["weyl_identity"] = weyl_identity_check(d, lam);
        emit(out, out_path);
        return 0;
    }

    if (loc_cmd->parsed()) {
        RootDatum d = load_datum(datum_spec);
        GKMClass c;
        if (class_name == "flag")
            c = flag_class(d);
        else if (class_name == "rho-limit")
            c = rho_limit_class(d);
        else if (class_name == "lambda")
            c = lambda_class(d, parse_ivec(lambda_s));
        else
            fail(errc::usage, "unknown class " + class_name);
        emit(to_json(d, c), out_path);
        return 0;
    }

    if (orc_cmd->parsed()) {
        RootDatum d = load_datum(datum_spec);
        if (!validate_path.empty()) {
            MultOracle o = table_oracle(d, read_json(validate_path));
            emit(json{{"valid", true}, {"entries", o.entries().size()}}, out_path);
            return 0;
        }
        check(p > 0, errc::usage, "oracle build needs --p");
        MultOracle o = rank1_oracle(d, p);
        emit(to_json(d, o), out_path);
        return 0;
    }

    auto load_oracle = [&](const RootDatum& d) -> MultOracle {
        if (!oracle_path.empty()) return table_oracle(d, read_json(oracle_path));
        check(d.ss_rank() == 1, errc::oracle_gap,
              "no oracle: pass --oracle for semisimple rank above one");
        return rank1_oracle(d, p);
    };

    if (rec_cmd->parsed()) {
        RootDatum d = load_datum(datum_spec);
        MultOracle oracle = load_oracle(d);
        CentralChar zeta = parse_zeta(d, zeta_s);
        // TODO: accept explicit region boxes; only the default generic region is wired up.
        check(region_s == "default", errc::usage, "only --region default is implemented");
        RunConfig cfg{datum_spec, p, zeta_s, oracle_path.empty() ? "rank1" : oracle_path,
                      region_s, format, 0};
        check(RunConfig::from_json(cfg.to_json()).to_json() == cfg.to_json(), errc::usage,
              "config does not round-trip");
        CycleTable table = reconstruct_default(d, p, oracle, zeta);
        json out = to_json(d, table);
        out["config"] = cfg.to_json();
        emit(out, out_path);
        json rep = json::array();
        bool all_ok = true;
        for (const auto& pres : covered_presentations(d, p, oracle, table)) {
            VerifyReport r = verify_bm_relations(d, p, oracle, table, pres);
            all_ok = all_ok && r.ok;
            json jr = to_json(d, r);
            jr["presentation"] = to_json(d, pres);
            rep.push_back(jr);
        }
        if (!report_path.empty())
            emit(json{{"all_ok", all_ok}, {"relations", rep}}, report_path);
        return all_ok ? 0 : 1;
    }

    if (ver_cmd->parsed()) {
        RootDatum d = load_datum(datum_spec);
        if (verifier == "recognition") {
            GkmVerifier v(d);
            GKMClass c = gkmclass_from_json(d, read_json(class_path));
            Recognition r = v.recognition_check(c);
            emit(json{{"verdict", recognition_name(r)}, {"pass", r == Recognition::pass}},
                 out_path);
            return r == Recognition::pass ? 0 : 1;
        }
        if (verifier == "residues") {
            GKMClass c = gkmclass_from_json(d, read_json(class_path));
            ResidueReport r = check_residues(d, c, gen_rho_orbit_triples(d));
            emit(json{{"pass", r.ok}, {"violations", r.violating}}, out_path);
            return r.ok ? 0 : 1;
        }
        if (verifier == "weyl") {
            bool ok = weyl_identity_check(d, parse_ivec(lambda_s));
            emit(json{{"pass", ok}}, out_path);
            return ok ? 0 : 1;
        }
        if (verifier == "bm" || verifier == "bm-ht") {
            check(p > 0, errc::usage, "needs --p");
            MultOracle oracle = load_oracle(d);
            CycleTable table = cycle_table_from_json(d, read_json(in_path));
            Presentation pres{parse_w(d, w_s), parse_ivec(mu_s), p};
            VerifyReport r = verifier == "bm"
                                 ? verify_bm_relations(d, p, oracle, table, pres)
                                 : verify_bm_ht(d, p, oracle, table, pres,
                                                parse_ivec(lambda_s));
            emit(to_json(d, r), out_path);
            return r.ok ? 0 : 1;
        }
        fail(errc::usage, "unknown verifier " + verifier);
    }

    if (fac_cmd->parsed()) {
        RootDatum d = load_datum(datum_spec);
        ExtAffWeyl u{parse_w(d, w_s), parse_ivec(nu_s)};
        auto [v, w1] = factor_regular(d, u);
        emit(json{{"v", to_json(d, v)}, {"w1", to_json(d, w1)}, {"u", to_json(d, u)}},
             out_path);
        return 0;
    }

    if (pre_cmd->parsed()) {
        RootDatum d = load_datum(datum_spec);
        Presentation pres{parse_w(d, w_s), parse_ivec(mu_s), p};
        RVec x = presentation_point(d, pres);
        json xv = json::array();
        for (const auto& q : x) xv.push_back(to_json(q));
        emit(json{{"presentation", to_json(d, pres)},
                  {"x", xv},
                  {"lowest_alcove", is_lowest_alcove(d, pres)}},
             out_path);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
