#pragma once

#include <optional>
#include <vector>

#include "alcove/mult_oracle.hpp"

namespace alcove {

/// Tame inertial presentation w-tilde(tau) = t^mu w; the derived point
/// x = (phi - w)^{-1}(mu) is exact rational.
struct Presentation {
    FinWeyl w;
    Weight mu;
    long long p = 0;
};

/// x_{w-tilde} = (phi - w)^{-1}(mu), the unique solution of phi(x) = mu + w(x).
inline RVec presentation_point(const RootDatum& d, const Presentation& pres) {
    size_t n = d.rank();
    IMat pinv = inverse_unimodular(d.pi());
    std::vector<RVec> rows(n, RVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            rows[i][j] = Rat(pres.p) * Rat(pinv(i, j)) - Rat(pres.w.mat(i, j));
    RVec b(n);
    for (size_t i = 0; i < n; ++i) b[i] = Rat(pres.mu[i]);
    auto sol = rat_solve(rows, b);
    check(sol.has_value(), errc::singular_solve, "phi - w is singular");
    // confirm: the solve above inverts p pi^{-1} - w, which is injective for p >= 2
    RVec lhs(n, Rat(0)), rhs(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            lhs[i] += Rat(pres.p) * Rat(pinv(i, j)) * (*sol)[j];
            rhs[i] += Rat(pres.w.mat(i, j)) * (*sol)[j];
        }
    for (size_t i = 0; i < n; ++i)
        check(lhs[i] == Rat(pres.mu[i]) + rhs[i], errc::singular_solve,
              "phi(x) = mu + w(x) failed");
    return *sol;
}

/// Lowest alcove: 0 < <x, alpha> < 1 for every positive root.
inline bool is_lowest_alcove(const RootDatum& d, const Presentation& pres) {
    RVec x = presentation_point(d, pres);
    for (const auto& a : d.positive_roots()) {
        Rat v(0);
        for (size_t i = 0; i < d.rank(); ++i) v += x[i] * Rat(a[i]);
        if (!(v > 0 && v < 1)) return false;
    }
    return true;
}

inline ExtAffWeyl presentation_element(const RootDatum& d, const Presentation& pres) {
    return aw_t_mu_w(d, pres.mu, pres.w);
}
inline Presentation presentation_from_element(const RootDatum& d, const ExtAffWeyl& a,
                                              long long p) {
    return Presentation{a.fin, aw_left_translation(d, a), p};
}

/// All length-zero elements with translation part bounded by `bound` in each coordinate.
inline std::vector<ExtAffWeyl> omega_elements(const RootDatum& d, long long bound) {
    std::set<ExtAffWeyl> out;
    std::vector<IVec> combos{IVec{}};
    for (size_t i = 0; i < d.rank(); ++i) {
        std::vector<IVec> next;
        for (const auto& c : combos)
            for (long long v = -bound; v <= bound; ++v) {
                IVec c2 = c;
                c2.push_back(v);
                next.push_back(c2);
            }
        combos = std::move(next);
    }
    for (const auto& nu : combos) {
        ExtAffWeyl om = central_char(d, aw_translation(d, nu));
        bool ok = true;
        for (long long v : om.trans)
            if (std::abs(v) > bound) ok = false;
        if (ok) out.insert(om);
    }
    return {out.begin(), out.end()};
}

/// The phi-conjugates phi(z) w-tilde z^{-1} over z in Omega within the translation
/// bound; each is again a lowest-alcove presentation.
inline std::vector<Presentation> phi_conjugates(const RootDatum& d, const Presentation& pres,
                                                long long bound) {
    check(is_lowest_alcove(d, pres), errc::not_generic,
          "phi_conjugates needs a lowest-alcove presentation");
    ExtAffWeyl wt = presentation_element(d, pres);
    std::vector<Presentation> out;
    for (const auto& z : omega_elements(d, bound)) {
        ExtAffWeyl img = aw_mult(d, aw_mult(d, phi(d, z, pres.p), wt), aw_inverse(d, z));
        Presentation q = presentation_from_element(d, img, pres.p);
        check(is_lowest_alcove(d, q), errc::invariant_violation,
              "phi-conjugate left the lowest alcove");
        out.push_back(q);
    }
    return out;
}

/// Compatibility of a Serre-weight pair (w1, omega) with zeta: the pair maps to
/// w1 t^omega mod W_aff.
inline bool pair_compatible_with(const RootDatum& d, const CentralChar& zeta,
                                 const ExtAffWeyl& w1, const Weight& omega) {
    return central_char(d, aw_mult(d, w1, aw_translation(d, omega))) == zeta;
}
/// Compatibility of a presentation with zeta: t^mu w mod W_aff.
inline bool presentation_compatible_with(const RootDatum& d, const CentralChar& zeta,
                                         const Presentation& pres) {
    return central_char(d, presentation_element(d, pres)) == zeta;
}

/// Admissible tuple: (t^{-w^{-1} nu})_dom <= w0 t^{-lambda-rho} u.
inline bool admissible_tuple(const RootDatum& d, const ExtAffWeyl& u, const FinWeyl& w,
                             const Weight& nu, const Weight& lam) {
    check(d.is_dominant(lam), errc::not_dominant, "admissible_tuple: lambda not dominant");
    Weight wnu = d.w_act(d.w_inverse(w), nu);
    ExtAffWeyl lhs = dominant_rep(d, aw_translation(d, -wnu));
    ExtAffWeyl bound = aw_mult(
        d, aw_mult(d, aw_fin(d.w_longest(), d.rank()), aw_translation(d, -(lam + d.rho()))), u);
    return bruhat_leq(d, lhs, bound);
}

/// Serre weight in X_1^*-normal form (p-restricted dominant highest weight).
struct SerreWeight {
    Weight hw;
    bool operator==(const SerreWeight& o) const { return hw == o.hw; }
    bool operator<(const SerreWeight& o) const { return hw < o.hw; }
};

inline bool is_p_restricted(const RootDatum& d, const Weight& hw, long long p) {
    for (const auto& a : d.simple_roots()) {
        long long v = dot(hw, a);
        if (v < 0 || v >= p) return false;
    }
    return true;
}

/// F_{(w1, omega)}: hw = pi^{-1}(w1) .p (omega - rho).
inline SerreWeight serre_weight_from_pair(const RootDatum& d, const ExtAffWeyl& w1,
                                          const Weight& omega, long long p) {
    ExtAffWeyl tw{d.pi_twist_inv(w1.fin), d.pi_inv_act(w1.trans)};
    Weight hw = dot_action(d, tw, omega - d.rho(), p, ActionMode::dot_p);
    check(is_p_restricted(d, hw, p), errc::invariant_violation,
          "pair does not give a p-restricted weight");
    return SerreWeight{hw};
}

/// HNF basis of (F - 1) X^0 = { p pi^{-1}(c) - c : c central }, the label ambiguity of
/// a Serre weight.
inline std::vector<IVec> serre_label_lattice(const RootDatum& d, long long p) {
    std::vector<IVec> gens;
    for (const auto& c : d.central_lattice()) gens.push_back(p * d.pi_inv_act(c) - c);
    return detail::hnf_rows(gens);
}

inline bool same_serre_weight(const RootDatum& d, const Weight& a, const Weight& b, long long p) {
    return detail::in_lattice(a - b, serre_label_lattice(d, p));
}

/// Inverse reparametrization: the unique (w1, omega) with omega - rho in C_0 and the
/// pair compatible with zeta, labelling the same Serre weight (the highest weight is
/// only defined modulo (F-1) X^0). Nullopt when no compatible pair exists.
inline std::optional<std::pair<ExtAffWeyl, Weight>> serre_weight_to_pair(
    const RootDatum& d, const SerreWeight& sw, const CentralChar& zeta, long long p) {
    check(is_p_restricted(d, sw.hw, p), errc::schema_error, "not p-restricted");
    auto amb = serre_label_lattice(d, p);
    std::vector<IVec> shifts{ivec_zero(d.rank())};
    for (const auto& g : amb) {
        std::vector<IVec> next;
        for (const auto& s : shifts)
            for (long long t = -2; t <= 2; ++t) next.push_back(s + t * g);
        shifts = std::move(next);
    }
    for (const auto& u : restricted_box(d)) {
        // solve hw = pi^{-1}(u) .p (omega - rho) for omega: with pi^{-1}(u) = (w', nu'),
        // hw = w'(omega + p nu') - rho, so omega = w'^{-1}(hw + rho) - p nu'.
        ExtAffWeyl tw{d.pi_twist_inv(u.fin), d.pi_inv_act(u.trans)};
        for (const auto& s : shifts) {
            Weight hw2 = sw.hw + s;
            Weight omega = d.w_act(d.w_inverse(tw.fin), hw2 + d.rho()) - p * tw.trans;
            bool in_c0 = true;
            for (const auto& a : d.positive_roots()) {
                long long v = dot(omega, a);
                if (!(v > 0 && v < p)) in_c0 = false;
            }
            if (!in_c0) continue;
            if (!pair_compatible_with(d, zeta, u, omega)) continue;
            SerreWeight back = serre_weight_from_pair(d, u, omega, p);
            if (same_serre_weight(d, back.hw, sw.hw, p)) return std::make_pair(u, omega);
        }
    }
    return std::nullopt;
}

/// The unique nu (and xi = mu + nu) attaching the restricted class u to the
/// constellation around mu for the central character zeta; nullopt if incompatible.
inline std::optional<std::pair<Weight, Weight>> jh_constellation(const RootDatum& d,
                                                                 const ExtAffWeyl& u,
                                                                 const CentralChar& zeta,
                                                                 const Weight& mu, long long p) {
    check(is_m_generic(d, mu, p, 1), errc::not_generic, "jh_constellation needs 1-generic mu");
    std::optional<std::pair<Weight, Weight>> out;
    for (const auto& nu : oracle_support_nus(d, u)) {
        if (!pair_compatible_with(d, zeta, u, mu + nu)) continue;
        if (!out || nu < out->second) out = std::make_pair(mu + nu, nu);
    }
    return out;
}

}  // namespace alcove
