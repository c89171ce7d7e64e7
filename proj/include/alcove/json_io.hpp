#pragma once

#include <json.hpp>

#include "alcove/bm.hpp"

namespace alcove {

using json = nlohmann::json;

inline json to_json(const IVec& v) { return json(v); }

inline IVec ivec_from_json(const json& j, size_t rank) {
    check(j.is_array() && j.size() == rank, errc::schema_error, "expected a length-" +
                                                                    std::to_string(rank) +
                                                                    " integer vector");
    IVec v;
    for (const auto& x : j) {
        check(x.is_number_integer(), errc::schema_error, "expected an integer entry");
        v.push_back(x.get<long long>());
    }
    return v;
}

inline json to_json(const IMat& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

inline IMat imat_from_json(const json& j, size_t rank) {
    check(j.is_array() && j.size() == rank, errc::schema_error, "expected a square matrix");
    IMat m(rank, rank);
    for (size_t i = 0; i < rank; ++i) {
        check(j[i].is_array() && j[i].size() == rank, errc::schema_error, "ragged matrix");
        for (size_t c = 0; c < rank; ++c) m(i, c) = j[i][c].get<long long>();
    }
    return m;
}

inline json to_json([[maybe_unused]] const RootDatum& d, const ExtAffWeyl& a) {
    return json{{"w", to_json(a.fin.mat)}, {"nu", to_json(a.trans)}};
}

inline ExtAffWeyl extaffweyl_from_json(const RootDatum& d, const json& j) {
    check(j.is_object() && j.contains("w") && j.contains("nu"), errc::schema_error,
          "element needs fields w and nu");
    FinWeyl w = d.w_from_matrix(imat_from_json(j.at("w"), d.rank()));
    return ExtAffWeyl{w, ivec_from_json(j.at("nu"), d.rank())};
}

inline json to_json(const Rat& q) {
    return json{{"num", rat_num(q).str()}, {"den", rat_den(q).str()}};
}

inline Rat rat_from_json(const json& j) {
    check(j.is_object() && j.contains("num") && j.contains("den"), errc::schema_error,
          "rational needs num/den strings");
    Int n(j.at("num").get<std::string>());
    Int dd(j.at("den").get<std::string>());
    check(dd != 0, errc::schema_error, "zero denominator");
    return Rat(n, dd);
}

inline json to_json(const PolyQ& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t = to_json(c);
        t["exp"] = to_json(e);
        terms.push_back(t);
    }
    return json{{"terms", terms}};
}

inline PolyQ polyq_from_json(const json& j, size_t rank) {
    check(j.is_object() && j.contains("terms"), errc::schema_error, "poly needs terms");
    PolyQ p(rank);
    for (const auto& t : j.at("terms"))
        p.add_term(ivec_from_json(t.at("exp"), rank), rat_from_json(t));
    return p;
}

inline json to_json(const RootFrac& f) {
    json poles = json::array();
    for (const auto& [i, m] : f.poles())
        poles.push_back(json{{"root_index", i}, {"mult", m}});
    return json{{"num", to_json(f.num())}, {"poles", poles}};
}

inline RootFrac rootfrac_from_json(const RootDatum& d, const json& j) {
    check(j.is_object() && j.contains("num") && j.contains("poles"), errc::schema_error,
          "fraction needs num and poles");
    RootFrac f = RootFrac::from_poly(d, polyq_from_json(j.at("num"), d.rank()));
    std::map<int, long long> poles;
    for (const auto& p : j.at("poles")) {
        int i = p.at("root_index").get<int>();
        check(i >= 0 && static_cast<size_t>(i) < d.positive_roots().size(), errc::schema_error,
              "pole index out of range");
        poles[i] += p.at("mult").get<long long>();
    }
    return f.mul(d, RootFrac::inverse_form(d, poles));
}

inline json to_json(const RootDatum& d, const GKMClass& c) {
    std::vector<const std::pair<const ExtAffWeyl, RootFrac>*> items;
    for (const auto& kv : c.support()) items.push_back(&kv);
    std::sort(items.begin(), items.end(), [&](auto* a, auto* b) {
        return canonical_less(d, a->first, b->first);
    });
    json sup = json::array();
    for (auto* kv : items)
        sup.push_back(json{{"elt", to_json(d, kv->first)}, {"coeff", to_json(kv->second)}});
    return json{{"support", sup}};
}

inline GKMClass gkmclass_from_json(const RootDatum& d, const json& j) {
    check(j.is_object() && j.contains("support"), errc::schema_error, "class needs support");
    GKMClass c;
    for (const auto& t : j.at("support")) {
        ExtAffWeyl x = extaffweyl_from_json(d, t.at("elt"));
        c.set(x, c.coeff(d, x).add(d, rootfrac_from_json(d, t.at("coeff"))));
    }
    return c;
}

inline json to_json(const RootDatum& d, const MultOracle& o) {
    json region = json::array();
    for (const auto& u : o.region()) region.push_back(to_json(d, u));
    json entries = json::array();
    for (const auto& [k, m] : o.entries())
        entries.push_back(json{{"u", to_json(d, k.u)}, {"nu", to_json(k.nu)}, {"mult", m}});
    return json{{"p", o.p()},
                {"datum", o.datum_id()},
                {"region", region},
                {"entries", entries}};
}

/// Builds a table-backed oracle from its JSON document; validates both structural
/// invariants. Errors: SchemaError, InvariantViolation.
inline MultOracle table_oracle(const RootDatum& d, const json& j) {
    check(j.is_object() && j.contains("p") && j.contains("datum") && j.contains("entries"),
          errc::schema_error, "oracle table needs p, datum, entries");
    check(j.at("datum").get<std::string>() == d.name(), errc::schema_error,
          "oracle table is for datum " + j.at("datum").get<std::string>());
    MultOracle o(d, j.at("p").get<long long>(), "table");
    if (j.contains("region"))
        for (const auto& u : j.at("region")) o.add_region(d, extaffweyl_from_json(d, u));
    for (const auto& e : j.at("entries"))
        o.add_entry(d, extaffweyl_from_json(d, e.at("u")), ivec_from_json(e.at("nu"), d.rank()),
                    e.at("mult").get<long long>());
    o.validate(d);
    return o;
}

inline json to_json(const RootDatum& d, const CycleTable& t) {
    json entries = json::array();
    for (const auto& [k, c] : t.entries)
        entries.push_back(
            json{{"u", to_json(d, k.u)}, {"xi", to_json(k.xi)}, {"class", to_json(d, c)}});
    return json{{"p", t.p},
                {"zeta", to_json(d, t.zeta)},
                {"oracle", t.oracle_id},
                {"oracle_h", t.oracle_h},
                {"entries", entries}};
}

inline CycleTable cycle_table_from_json(const RootDatum& d, const json& j) {
    CycleTable t;
    t.p = j.at("p").get<long long>();
    t.zeta = extaffweyl_from_json(d, j.at("zeta"));
    t.oracle_id = j.value("oracle", std::string{});
    t.oracle_h = j.value("oracle_h", 0LL);
    for (const auto& e : j.at("entries")) {
        CycleKey k{extaffweyl_from_json(d, e.at("u")), ivec_from_json(e.at("xi"), d.rank())};
        t.entries[k] = gkmclass_from_json(d, e.at("class"));
    }
    return t;
}

inline json to_json([[maybe_unused]] const RootDatum& d, const Presentation& p) {
    return json{{"w", to_json(p.w.mat)}, {"mu", to_json(p.mu)}, {"p", p.p}};
}

inline json to_json(const SerreWeight& sw) { return json{{"hw", to_json(sw.hw)}}; }
/// Optionally annotated with a compatible pair: {"hw", "w1", "omega", "zeta"}.
inline json to_json(const RootDatum& d, const SerreWeight& sw, const CentralChar& zeta,
                    long long p) {
    json out = to_json(sw);
    if (auto pair = serre_weight_to_pair(d, sw, zeta, p)) {
        out["w1"] = to_json(d, pair->first);
        out["omega"] = to_json(pair->second);
        out["zeta"] = to_json(d, zeta);
    }
    return out;
}
inline SerreWeight serre_weight_from_json(const RootDatum& d, const json& j) {
    return SerreWeight{ivec_from_json(j.at("hw"), d.rank())};
}

inline Presentation presentation_from_json(const RootDatum& d, const json& j) {
    return Presentation{d.w_from_matrix(imat_from_json(j.at("w"), d.rank())),
                        ivec_from_json(j.at("mu"), d.rank()), j.at("p").get<long long>()};
}

inline json to_json(const RootDatum& d, const VerifyReport& r) {
    json out;
    out["ok"] = r.ok;
    json ds = json::array();
    for (const auto& disc : r.discrepancies)
        ds.push_back(json{{"fixed_point", to_json(d, disc.fixed_point)},
                          {"lhs", to_json(disc.lhs)},
                          {"rhs", to_json(disc.rhs)}});
    out["discrepancies"] = ds;
    return out;
}

/// Explicit root datum from {"rank", "simple_roots", "simple_coroots", "rho", "pi"}.
inline RootDatum root_datum_from_json(const json& j) {
    check(j.is_object() && j.contains("rank"), errc::schema_error, "datum needs rank");
    size_t rank = j.at("rank").get<size_t>();
    std::vector<IVec> roots, coroots;
    for (const auto& r : j.at("simple_roots")) roots.push_back(ivec_from_json(r, rank));
    for (const auto& r : j.at("simple_coroots")) coroots.push_back(ivec_from_json(r, rank));
    IVec rho = ivec_from_json(j.at("rho"), rank);
    IMat pi = j.contains("pi") ? imat_from_json(j.at("pi"), rank) : IMat::identity(rank);
    return RootDatum(rank, roots, coroots, rho, pi);
}

inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace alcove
