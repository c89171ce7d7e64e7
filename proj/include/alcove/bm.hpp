#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alcove/characters.hpp"
#include "alcove/gkm.hpp"
#include "alcove/tame.hpp"

namespace alcove {

/// t^mu w applied to the limit cycle: the left side of every reconstruction relation.
inline GKMClass verma_class_shifted(const RootDatum& d, const FinWeyl& w, const Weight& mu) {
    return act_dot(d, aw_t_mu_w(d, mu, w), rho_limit_class(d));
}

/// Table key (u restricted, xi in C_0), normalized so that u carries the canonical
/// central representative: (u t^c, xi) and (u, xi + c) label the same cycle.
struct CycleKey {
    ExtAffWeyl u;
    Weight xi;
    bool operator<(const CycleKey& o) const {
        if (!(u == o.u)) return u < o.u;
        return xi < o.xi;
    }
    bool operator==(const CycleKey& o) const { return u == o.u && xi == o.xi; }
};

inline CycleKey cycle_key(const RootDatum& d, const ExtAffWeyl& u, const Weight& xi) {
    OracleKey k = canonical_key(d, u, ivec_zero(d.rank()));
    IVec c0 = u.trans - k.u.trans;
    return CycleKey{k.u, xi + c0};
}

/// Reconstructed Breuil-Mezard cycle table for one central character.
struct CycleTable {
    long long p = 0;
    CentralChar zeta;
    std::string oracle_id;
    long long oracle_h = 0;  // support-genericity parameter of the oracle
    std::map<CycleKey, GKMClass> entries;

    bool has(const CycleKey& k) const { return entries.count(k) > 0; }
    const GKMClass& at(const RootDatum& d, const ExtAffWeyl& u, const Weight& xi) const {
        auto it = entries.find(cycle_key(d, u, xi));
        check(it != entries.end(), errc::table_gap, "no table entry for this (u, xi)");
        return it->second;
    }
};

/// Defect of z with respect to Z(u, xi): ell(u) - ell(x-tilde) for the unique
/// factorization t^{-(xi+rho)} z = sigma w0 x-tilde with x-tilde dominant.
inline long long defect(const RootDatum& d, const ExtAffWeyl& z, const ExtAffWeyl& u,
                        const Weight& xi) {
    ExtAffWeyl y = aw_mult(d, aw_translation(d, -(xi + d.rho())), z);
    ExtAffWeyl w0u = aw_mult(d, aw_fin(d.w_longest(), d.rank()), u);
    check(bruhat_leq(d, y, w0u), errc::not_in_support_cone,
          "z outside t^{xi+rho} W_{<= w0 u}");
    ExtAffWeyl xt = dominant_rep(d, y);
    long long delta = aw_length(d, u) - aw_length(d, xt);
    check(delta >= 0, errc::invariant_violation, "negative defect");
    return delta;
}

namespace detail {

/// The anchor relation for the coefficient of Z(u, xi) at z: sigma w0 t^{-rho} u = t^kappa w
/// with sigma from the dominant factorization of t^{-(xi+rho)} z, and mu = xi + rho + kappa.
struct AnchorRelation {
    FinWeyl w;
    Weight mu;
    long long delta = 0;  // defect of z wrt (u, xi)
};

inline AnchorRelation anchor_relation(const RootDatum& d, const ExtAffWeyl& z,
                                      const ExtAffWeyl& u, const Weight& xi) {
    ExtAffWeyl y = aw_mult(d, aw_translation(d, -(xi + d.rho())), z);
    ExtAffWeyl xt = dominant_rep(d, y);
    ExtAffWeyl w0 = aw_fin(d.w_longest(), d.rank());
    ExtAffWeyl sigma = aw_mult(d, aw_mult(d, y, aw_inverse(d, xt)), aw_inverse(d, w0));
    check(is_zero(sigma.trans), errc::invariant_violation, "sigma is not finite");
    ExtAffWeyl e = aw_mult(d, aw_mult(d, sigma, w0),
                           aw_mult(d, aw_translation(d, -d.rho()), u));
    AnchorRelation r;
    r.w = e.fin;
    Weight kappa = aw_left_translation(d, e);
    r.mu = xi + d.rho() + kappa;
    r.delta = aw_length(d, u) - aw_length(d, xt);
    return r;
}

}  // namespace detail

/// One coefficient of the key recursion: the coefficient of Z(u, xi) at z, computed
/// from the anchor relation minus the strictly-lower-defect corrections read from the
/// partially built table.
inline RootFrac recursion_step(const RootDatum& d, const ExtAffWeyl& z, const ExtAffWeyl& u,
                               const Weight& xi, long long p, const MultOracle& oracle,
                               const CycleTable& table) {
    long long h = std::max(table.oracle_h, d.h_rho());
    check(is_m_generic(d, aw_apply_zero(d, z), p, h + 2 * d.h_rho()), errc::genericity_violation,
          "key recursion needs z(0) to be (max{h,h_rho}+2h_rho)-generic");
    detail::AnchorRelation rel = detail::anchor_relation(d, z, u, xi);
    GKMClass lhs = verma_class_shifted(d, rel.w, rel.mu);
    RootFrac coeff = lhs.coeff(d, z);
    // corrections: other (u', nu') in the relation whose cone contains z
    CycleKey target = cycle_key(d, u, xi);
    for (const auto& u2 : oracle.region()) {
        for (const auto& nu2 : oracle_support_nus(d, u2)) {
            long long m = oracle.lookup(d, u2, nu2);
            if (m == 0) continue;
            Weight xi2 = rel.mu - d.rho() + d.w_act(rel.w, d.pi_act(nu2));
            ExtAffWeyl pu2{d.pi_twist(u2.fin), d.pi_act(u2.trans)};
            CycleKey k2 = cycle_key(d, pu2, xi2);
            if (k2 == target) continue;
            ExtAffWeyl y2 = aw_mult(d, aw_translation(d, -(k2.xi + d.rho())), z);
            if (!bruhat_leq(d, y2, aw_mult(d, aw_fin(d.w_longest(), d.rank()), k2.u))) continue;
            long long delta2 = defect(d, z, k2.u, k2.xi);
            check(delta2 < rel.delta, errc::invariant_violation,
                  "correction term does not have strictly smaller defect");
            auto it = table.entries.find(k2);
            check(it != table.entries.end(), errc::missing_lower_defect,
                  "lower-defect entry not yet computed");
            coeff = coeff.sub(d, it->second.coeff(d, z).scale(d, Rat(m)));
        }
    }
    return coeff;
}

enum class Schedule { defect_lex, defect_revlex };

struct ReconstructOptions {
    Schedule schedule = Schedule::defect_lex;
    long long oracle_h = 0;  // the Situation's h for the oracle (support genericity)
};

/// The default region: all (u, xi) with u a canonical restricted representative,
/// xi in C_0 compatible with zeta, and xi + rho (max{h, h_rho} + 3h_rho)-generic.
inline std::vector<CycleKey> default_region(const RootDatum& d, long long p,
                                            const CentralChar& zeta, long long oracle_h) {
    // The presentation layer needs 1-generic weights to exist at all.
    check(p >= 2 * 1 + 2, errc::region_not_generic,
          "no 1-generic weight exists for this p (need p > 2m+1 with m = 1)");
    long long g = std::max(oracle_h, d.h_rho()) + 3 * d.h_rho();
    std::vector<CycleKey> out;
    for (const auto& u0 : restricted_box(d)) {
        ExtAffWeyl u = cycle_key(d, u0, ivec_zero(d.rank())).u;
        // xi must satisfy [nu_u + xi + rho] = [zeta] in Omega, i.e. xi lies in
        // (zeta - nu_u - rho) + Q-check; enumerate the coroot-lattice fiber.
        Weight base = zeta.trans - u.trans - d.rho();
        std::vector<Weight> fiber{base};
        for (size_t i = 0; i < d.ss_rank(); ++i) {
            std::vector<Weight> next;
            for (const auto& v : fiber)
                for (long long t = -2 * p; t <= 2 * p; ++t)
                    next.push_back(v + t * d.simple_coroots()[i]);
            fiber = std::move(next);
        }
        for (const auto& xi : fiber) {
            bool in_c0 = true;
            for (const auto& a : d.positive_roots()) {
                long long v = dot(xi + d.rho(), a);
                if (!(v > 0 && v < p)) in_c0 = false;
            }
            if (!in_c0) continue;
            if (!is_m_generic(d, xi + d.rho(), p, g)) continue;
            if (!pair_compatible_with(d, zeta, u, xi + d.rho())) continue;
            CycleKey k = cycle_key(d, u, xi);
            if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Reconstructs the cycle table over the region by increasing defect. Deterministic:
/// any valid schedule yields the identical table.
inline CycleTable reconstruct(const RootDatum& d, long long p, const MultOracle& oracle,
                              const CentralChar& zeta, const std::vector<CycleKey>& region,
                              const ReconstructOptions& opt = {}) {
    CycleTable table;
    table.p = p;
    table.zeta = zeta;
    table.oracle_id = oracle.source();
    table.oracle_h = opt.oracle_h;
    struct Task {
        long long delta;
        CycleKey key;
        ExtAffWeyl z;
    };
    std::vector<Task> tasks;
    ExtAffWeyl w0 = aw_fin(d.w_longest(), d.rank());
    for (const auto& k : region) {
        table.entries.emplace(k, GKMClass{});
        for (const auto& y : lower_interval(d, aw_mult(d, w0, k.u))) {
            ExtAffWeyl z = aw_mult(d, aw_translation(d, k.xi + d.rho()), y);
            tasks.push_back(Task{defect(d, z, k.u, k.xi), k, z});
        }
    }
    auto lex = [](const Task& a, const Task& b) {
        if (a.delta != b.delta) return a.delta < b.delta;
        if (!(a.key == b.key)) return a.key < b.key;
        return a.z < b.z;
    };
    if (opt.schedule == Schedule::defect_lex) {
        std::sort(tasks.begin(), tasks.end(), lex);
    } else {
        std::sort(tasks.begin(), tasks.end(), [&](const Task& a, const Task& b) {
            if (a.delta != b.delta) return a.delta < b.delta;
            return lex(b, a);
        });
    }
    for (const auto& t : tasks) {
        RootFrac c = recursion_step(d, t.z, t.key.u, t.key.xi, p, oracle, table);
        table.entries[t.key].set(t.z, c);
    }
    return table;
}

inline CycleTable reconstruct_default(const RootDatum& d, long long p, const MultOracle& oracle,
                                      const CentralChar& zeta,
                                      const ReconstructOptions& opt = {}) {
    return reconstruct(d, p, oracle, zeta, default_region(d, p, zeta, opt.oracle_h), opt);
}

/// A per-fixed-point discrepancy in a verification.
struct Discrepancy {
    ExtAffWeyl fixed_point;
    RootFrac lhs;
    RootFrac rhs;
};

struct VerifyReport {
    bool ok = true;
    std::vector<Discrepancy> discrepancies;
};

/// The table's central character matches presentations (w, mu) for Hodge-Tate weight
/// lambda when [mu] + [lambda] + pi([rho]) = [zeta] (the entries of the relation all
/// carry that class; lambda = 0 recovers the basic relation).
inline bool presentation_matches_table(const RootDatum& d, const Presentation& pres,
                                       const CycleTable& table,
                                       const Weight& lam) {
    ExtAffWeyl shifted = aw_translation(d, pres.mu + lam + d.pi_act(d.rho()));
    return central_char(d, shifted) == table.zeta;
}
inline bool presentation_matches_table(const RootDatum& d, const Presentation& pres,
                                       const CycleTable& table) {
    return presentation_matches_table(d, pres, table, ivec_zero(d.rank()));
}

/// The Breuil-Mezard relation at GKM level for one presentation:
/// t^mu w . SS[Z-hat_1(p rho)] = sum m_{u,nu} Z(pi u, mu - rho + w pi nu).
inline VerifyReport verify_bm_relations(const RootDatum& d, long long p,
                                        const MultOracle& oracle, const CycleTable& table,
                                        const Presentation& pres) {
    check(is_m_generic(d, pres.mu, p, 2 * d.h_rho()), errc::not_generic,
          "BM relation needs mu 2h_rho-generic");
    check(presentation_matches_table(d, pres, table), errc::table_gap,
          "presentation is not compatible with the table's central character");
    GKMClass lhs = verma_class_shifted(d, pres.w, pres.mu);
    GKMClass rhs;
    for (const auto& u : oracle.region()) {
        for (const auto& nu : oracle_support_nus(d, u)) {
            long long m = oracle.lookup(d, u, nu);
            if (m == 0) continue;
            Weight xi = pres.mu - d.rho() + d.w_act(pres.w, d.pi_act(nu));
            ExtAffWeyl pu{d.pi_twist(u.fin), d.pi_act(u.trans)};
            rhs = rhs.add(d, table.at(d, pu, xi).scale(d, Rat(m)));
        }
    }
    VerifyReport rep;
    GKMClass diff = lhs.sub(d, rhs);
    for (const auto& [z, f] : diff.support()) {
        rep.ok = false;
        rep.discrepancies.push_back(Discrepancy{z, lhs.coeff(d, z), rhs.coeff(d, z)});
    }
    return rep;
}

/// The Breuil-Mezard relation with Hodge-Tate weight lambda: the left side is the
/// Weyl-character decomposition of the lambda-shifted class, the right side assembles
/// [W(lambda) x R(w,mu) : sigma] from the translated tables.
inline VerifyReport verify_bm_ht(const RootDatum& d, long long p, const MultOracle& oracle,
                                 const CycleTable& table, const Presentation& pres,
                                 const Weight& lam) {
    check(d.is_dominant(lam), errc::not_dominant, "lambda must be dominant");
    check(is_m_generic(d, pres.mu, p, d.height(lam) + 2 * d.h_rho()), errc::not_generic,
          "BM relation with HT weight needs mu (h_lambda + 2h_rho)-generic");
    check(presentation_matches_table(d, pres, table, lam), errc::table_gap,
          "presentation is not compatible with the table's central character");
    CharacterQ mults = weight_multiplicities(d, lam);
    GKMClass base = verma_class_shifted(d, pres.w, pres.mu);
    GKMClass lhs, rhs;
    for (const auto& [kappa, m] : mults.terms())
        lhs = lhs.add(d, act_dot(d, aw_translation(d, kappa), base).scale(d, Rat(m)));
    for (const auto& [kappa, mk] : mults.terms()) {
        for (const auto& u : oracle.region()) {
            for (const auto& nu : oracle_support_nus(d, u)) {
                long long m = oracle.lookup(d, u, nu);
                if (m == 0) continue;
                Weight xi = pres.mu + kappa - d.rho() + d.w_act(pres.w, d.pi_act(nu));
                ExtAffWeyl pu{d.pi_twist(u.fin), d.pi_act(u.trans)};
                rhs = rhs.add(d, table.at(d, pu, xi).scale(d, Rat(mk * m)));
            }
        }
    }
    VerifyReport rep;
    GKMClass diff = lhs.sub(d, rhs);
    for (const auto& [z, f] : diff.support()) {
        rep.ok = false;
        rep.discrepancies.push_back(Discrepancy{z, lhs.coeff(d, z), rhs.coeff(d, z)});
    }
    return rep;
}

/// Support-bound invariant of a table entry: equivariant support inside
/// t^{xi+rho} W_{<= w0 u}.
inline bool entry_support_ok(const RootDatum& d, const CycleKey& k, const GKMClass& c) {
    ExtAffWeyl w0u = aw_mult(d, aw_fin(d.w_longest(), d.rank()), k.u);
    for (const auto& [z, f] : c.support()) {
        ExtAffWeyl y = aw_mult(d, aw_translation(d, -(k.xi + d.rho())), z);
        if (!bruhat_leq(d, y, w0u)) return false;
    }
    return true;
}

/// All 2h_rho-generic presentations (w, mu) whose relation instance is entirely
/// covered by the table (used for the exhaustive verification sweep).
inline std::vector<Presentation> covered_presentations(const RootDatum& d, long long p,
                                                       const MultOracle& oracle,
                                                       const CycleTable& table) {
    std::set<std::pair<IVec, IVec>> seen;  // (w matrix flattened, mu)
    std::vector<Presentation> out;
    for (const auto& [k, c] : table.entries) {
        // candidate mu from xi = mu - rho + w pi nu over oracle support and w
        for (const auto& w : d.weyl()) {
            for (const auto& u : oracle.region()) {
                ExtAffWeyl pu{d.pi_twist(u.fin), d.pi_act(u.trans)};
                if (!(cycle_key(d, pu, ivec_zero(d.rank())).u == k.u)) continue;
                for (const auto& nu : oracle_support_nus(d, u)) {
                    if (oracle.lookup(d, u, nu) == 0) continue;
                    Weight shift = k.xi - (cycle_key(d, pu, ivec_zero(d.rank())).xi);
                    Weight mu = shift + d.rho() - d.w_act(w, d.pi_act(nu));
                    if (!is_m_generic(d, mu, p, 2 * d.h_rho())) continue;
                    Presentation pres{w, mu, p};
                    if (!presentation_matches_table(d, pres, table)) continue;
                    if (!seen.insert({w.mat.a, mu}).second) continue;
                    // keep only instances with every needed entry present
                    bool covered = true;
                    for (const auto& u2 : oracle.region())
                        for (const auto& nu2 : oracle_support_nus(d, u2)) {
                            if (oracle.lookup(d, u2, nu2) == 0) continue;
                            Weight xi2 = mu - d.rho() + d.w_act(w, d.pi_act(nu2));
                            ExtAffWeyl pu2{d.pi_twist(u2.fin), d.pi_act(u2.trans)};
                            if (!table.has(cycle_key(d, pu2, xi2))) covered = false;
                        }
                    if (covered) out.push_back(pres);
                }
            }
        }
    }
    return out;
}

}  // namespace alcove
