#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "alcove/root_datum.hpp"

namespace alcove {

/// Element of the extended affine Weyl group, stored as w t^nu acting on
/// X_*(T-check) x R by x -> w(x + nu).
struct ExtAffWeyl {
    FinWeyl fin;
    IVec trans;

    bool operator==(const ExtAffWeyl& o) const { return trans == o.trans && fin == o.fin; }
    bool operator!=(const ExtAffWeyl& o) const { return !(*this == o); }
    bool operator<(const ExtAffWeyl& o) const {
        if (trans != o.trans) return trans < o.trans;
        return fin < o.fin;
    }
};

/// Alcove, recorded by its strip vector: for each positive root alpha the integer
/// m with the alcove inside the strip m < <x,alpha> < m+1.
struct Alcove {
    IVec strips;
    bool operator==(const Alcove& o) const { return strips == o.strips; }
};

/// A central character: the unique length-zero element of its coset of W_aff.
using CentralChar = ExtAffWeyl;

inline ExtAffWeyl aw_identity(const RootDatum& d) {
    return {d.w_identity(), ivec_zero(d.rank())};
}
inline ExtAffWeyl aw_translation(const RootDatum& d, const Weight& nu) {
    return {d.w_identity(), nu};
}
inline ExtAffWeyl aw_fin(const FinWeyl& w, size_t rank) { return {w, ivec_zero(rank)}; }
/// t^mu w as an element (mu on the left of the finite part).
inline ExtAffWeyl aw_t_mu_w(const RootDatum& d, const Weight& mu, const FinWeyl& w) {
    return {w, d.w_act(d.w_inverse(w), mu)};
}
/// Translation part when the element is written as t^kappa w: kappa = w(nu).
inline Weight aw_left_translation(const RootDatum& d, const ExtAffWeyl& a) {
    return d.w_act(a.fin, a.trans);
}

inline ExtAffWeyl aw_mult(const RootDatum& d, const ExtAffWeyl& a, const ExtAffWeyl& b) {
    return {d.w_mult(a.fin, b.fin), b.trans + d.w_act(d.w_inverse(b.fin), a.trans)};
}
inline ExtAffWeyl aw_inverse(const RootDatum& d, const ExtAffWeyl& a) {
    return {d.w_inverse(a.fin), -d.w_act(a.fin, a.trans)};
}
inline RVec aw_apply(const RootDatum& d, const ExtAffWeyl& a, const RVec& x) {
    RVec y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] + Rat(a.trans[i]);
    return d.w_act(a.fin, y);
}
/// Image of the origin: w(nu).
inline Weight aw_apply_zero(const RootDatum& d, const ExtAffWeyl& a) {
    return d.w_act(a.fin, a.trans);
}

inline Alcove alcove_of(const RootDatum& d, const ExtAffWeyl& a) {
    RVec y = aw_apply(d, a, d.base_alcove_point());
    Alcove alc;
    alc.strips.reserve(d.positive_roots().size());
    for (const auto& root : d.positive_roots()) {
        Rat v(0);
        for (size_t i = 0; i < y.size(); ++i) v += y[i] * Rat(root[i]);
        alc.strips.push_back(static_cast<long long>(rat_floor(v)));
    }
    return alc;
}

/// Number of affine root hyperplanes separating A0 and a(A0).
inline long long aw_length(const RootDatum& d, const ExtAffWeyl& a) {
    long long len = 0;
    for (long long m : alcove_of(d, a).strips) len += std::abs(m);
    return len;
}

/// Per-direction separation count: h_{w-tilde}.
inline long long aw_height(const RootDatum& d, const ExtAffWeyl& a) {
    long long h = 0;
    for (long long m : alcove_of(d, a).strips) h = std::max(h, std::abs(m));
    return h;
}

inline bool aw_is_dominant(const RootDatum& d, const ExtAffWeyl& a) {
    for (long long m : alcove_of(d, a).strips)
        if (m < 0) return false;
    return true;
}

/// Regular: a(A0) shares no alpha-strip with A0, i.e. every strip entry is nonzero.
inline bool is_regular(const RootDatum& d, const ExtAffWeyl& a) {
    for (long long m : alcove_of(d, a).strips)
        if (m == 0) return false;
    return true;
}

/// Membership in the fundamental box: strip entry 0 for every simple root.
inline bool in_fundamental_box(const RootDatum& d, const ExtAffWeyl& a) {
    RVec y = aw_apply(d, a, d.base_alcove_point());
    for (const auto& root : d.simple_roots()) {
        Rat v(0);
        for (size_t i = 0; i < y.size(); ++i) v += y[i] * Rat(root[i]);
        if (rat_floor(v) != 0) return false;
    }
    return true;
}

/// m-small: the translation part has height at most m.
inline bool is_m_small(const RootDatum& d, const ExtAffWeyl& a, long long m) {
    return d.height(a.trans) <= m;
}

/// Simple reflections of W_aff as extended affine Weyl elements: the finite simple
/// reflections plus, per irreducible component, the reflection in the wall
/// <x, theta> = 1 for the highest root theta.
inline std::vector<ExtAffWeyl> affine_simple_reflections(const RootDatum& d) {
    std::vector<ExtAffWeyl> out;
    for (size_t i = 0; i < d.ss_rank(); ++i)
        out.push_back(aw_fin(d.simple_reflection(i), d.rank()));
    for (const auto& theta : d.highest_roots()) {
        IVec theta_v = d.coroot_of(theta);
        IMat m = IMat::identity(d.rank());
        for (size_t r = 0; r < d.rank(); ++r)
            for (size_t c = 0; c < d.rank(); ++c) m(r, c) -= theta_v[r] * theta[c];
        out.push_back({d.w_from_matrix(m), -theta_v});
    }
    return out;
}

/// Factors a = omega * (product of affine simple reflections given by word), with
/// omega the unique length-zero element of the coset a W_aff.
struct OmegaWord {
    ExtAffWeyl omega;
    std::vector<int> word;  // indices into affine_simple_reflections(d)
};

inline OmegaWord omega_word(const RootDatum& d, const ExtAffWeyl& a) {
    std::vector<ExtAffWeyl> gens = affine_simple_reflections(d);
    ExtAffWeyl cur = a;
    long long len = aw_length(d, cur);
    std::vector<int> collected;
    while (len > 0) {
        bool found = false;
        for (size_t j = 0; j < gens.size(); ++j) {
            ExtAffWeyl nxt = aw_mult(d, cur, gens[j]);
            long long l2 = aw_length(d, nxt);
            if (l2 < len) {
                collected.push_back(static_cast<int>(j));
                cur = nxt;
                len = l2;
                found = true;
                break;
            }
        }
        check(found, errc::schema_error, "no descent found");
    }
    std::reverse(collected.begin(), collected.end());
    return {cur, collected};
}

/// The unique length-zero element of a's coset of W_aff (its central character).
inline CentralChar central_char(const RootDatum& d, const ExtAffWeyl& a) {
    return omega_word(d, a).omega;
}

inline bool same_waff_coset(const RootDatum& d, const ExtAffWeyl& a, const ExtAffWeyl& b) {
    return central_char(d, a) == central_char(d, b);
}

/// Bruhat order on W-tilde: false across different W_aff-cosets; within a coset,
/// the Coxeter Bruhat order via the greedy descent test on a reduced word of b.
inline bool bruhat_leq(const RootDatum& d, const ExtAffWeyl& a, const ExtAffWeyl& b) {
    if (a == b) return true;
    long long la = aw_length(d, a), lb = aw_length(d, b);
    if (la > lb) return false;
    OmegaWord ob = omega_word(d, b);
    std::vector<ExtAffWeyl> gens = affine_simple_reflections(d);
    ExtAffWeyl cur = a;
    long long len = la;
    for (auto it = ob.word.rbegin(); it != ob.word.rend(); ++it) {
        ExtAffWeyl nxt = aw_mult(d, cur, gens[*it]);
        long long l2 = aw_length(d, nxt);
        if (l2 < len) {
            cur = nxt;
            len = l2;
        }
    }
    return cur == ob.omega;
}

/// The full lower Bruhat interval of b, computed as all subword products of a fixed
/// reduced word. Independent of bruhat_leq; also serves as its cross-validation oracle.
inline std::vector<ExtAffWeyl> lower_interval(const RootDatum& d, const ExtAffWeyl& b) {
    OmegaWord ob = omega_word(d, b);
    std::vector<ExtAffWeyl> gens = affine_simple_reflections(d);
    std::set<ExtAffWeyl> out;
    size_t m = ob.word.size();
    check(m <= 24, errc::schema_error, "interval too large for subword enumeration");
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        ExtAffWeyl cur = ob.omega;
        for (size_t j = 0; j < m; ++j)
            if (mask & (size_t{1} << j)) cur = aw_mult(d, cur, gens[ob.word[j]]);
        out.insert(cur);
    }
    return {out.begin(), out.end()};
}

/// Elements covered by b (one-letter deletions of a reduced word that drop the length
/// by exactly one; complete by the strong exchange property).
inline std::vector<ExtAffWeyl> covers_down(const RootDatum& d, const ExtAffWeyl& b) {
    OmegaWord ob = omega_word(d, b);
    std::vector<ExtAffWeyl> gens = affine_simple_reflections(d);
    long long lb = static_cast<long long>(ob.word.size());
    std::set<ExtAffWeyl> out;
    for (size_t k = 0; k < ob.word.size(); ++k) {
        ExtAffWeyl cur = ob.omega;
        for (size_t j = 0; j < ob.word.size(); ++j)
            if (j != k) cur = aw_mult(d, cur, gens[ob.word[j]]);
        if (aw_length(d, cur) == lb - 1) out.insert(cur);
    }
    return {out.begin(), out.end()};
}

/// Admissible set Adm(lambda): downward Bruhat closure of the orbit translations
/// t^{w lambda}, enumerated by cover descent.
inline std::vector<ExtAffWeyl> adm(const RootDatum& d, const Weight& lam) {
    check(d.is_dominant(lam), errc::not_dominant, "adm: lambda must be dominant");
    std::set<ExtAffWeyl> seen;
    std::vector<ExtAffWeyl> queue;
    for (const auto& mu : d.weyl_orbit(lam)) {
        ExtAffWeyl t = aw_translation(d, mu);
        if (seen.insert(t).second) queue.push_back(t);
    }
    for (size_t q = 0; q < queue.size(); ++q)
        for (const auto& c : covers_down(d, queue[q]))
            if (seen.insert(c).second) queue.push_back(c);
    return {seen.begin(), seen.end()};
}

inline std::vector<ExtAffWeyl> adm_reg(const RootDatum& d, const Weight& lam) {
    std::vector<ExtAffWeyl> out;
    for (const auto& a : adm(d, lam))
        if (is_regular(d, a)) out.push_back(a);
    return out;
}

/// The unique dominant element of W * a; it has minimal length in the coset.
inline ExtAffWeyl dominant_rep(const RootDatum& d, const ExtAffWeyl& a) {
    for (const auto& w : d.weyl()) {
        ExtAffWeyl cand = aw_mult(d, aw_fin(w, d.rank()), a);
        if (aw_is_dominant(d, cand)) return cand;
    }
    fail(errc::schema_error, "no dominant representative found");
}

/// One representative t^{rho_w} w per finite Weyl element, with rho_w the sum of
/// fundamental coweight lifts over simple alpha with w^{-1} alpha < 0. These send the
/// base alcove into the fundamental box; the central coordinate is the canonical lift.
inline std::vector<ExtAffWeyl> restricted_box(const RootDatum& d) {
    check(d.ss_rank() >= 1, errc::schema_error, "restricted_box needs semisimple rank >= 1");
    std::vector<ExtAffWeyl> out;
    for (const auto& w : d.weyl()) {
        IVec rho_w = ivec_zero(d.rank());
        FinWeyl winv = d.w_inverse(w);
        for (size_t i = 0; i < d.ss_rank(); ++i) {
            IVec img = d.w_act_root(winv, d.simple_roots()[i]);
            if (!d.is_positive_root(img)) rho_w = rho_w + d.fundamental_coweight(i);
        }
        ExtAffWeyl elt = aw_t_mu_w(d, rho_w, w);
        check(in_fundamental_box(d, elt), errc::invariant_violation,
              "restricted element landed outside the fundamental box");
        out.push_back(elt);
    }
    return out;
}

/// Unique factorization u = v^{-1} w0 w1 of a regular element, with v dominant and
/// w1 among the canonical restricted representatives.
inline std::pair<ExtAffWeyl, ExtAffWeyl> factor_regular(const RootDatum& d, const ExtAffWeyl& u) {
    check(is_regular(d, u), errc::not_regular, "factor_regular: element is not regular");
    ExtAffWeyl w0 = aw_fin(d.w_longest(), d.rank());
    ExtAffWeyl uinv = aw_inverse(d, u);
    std::pair<ExtAffWeyl, ExtAffWeyl> found{aw_identity(d), aw_identity(d)};
    int hits = 0;
    for (const auto& w1 : restricted_box(d)) {
        ExtAffWeyl v = aw_mult(d, aw_mult(d, w0, w1), uinv);
        if (aw_is_dominant(d, v)) {
            found = {v, w1};
            ++hits;
        }
    }
    check(hits == 1, errc::invariant_violation, "regular factorization not unique");
    return found;
}

/// m-genericity of a weight: |<lam,alpha> + p k| > m for all roots and k.
inline bool is_m_generic(const RootDatum& d, const Weight& lam, long long p, long long m) {
    for (const auto& a : d.positive_roots()) {
        long long r = ((dot(lam, a) % p) + p) % p;
        if (std::min(r, p - r) <= m) return false;
    }
    return true;
}

enum class ActionMode { plain, dot, plain_p, dot_p };

/// The four actions of w-tilde = w t^nu on a weight.
inline Weight dot_action(const RootDatum& d, const ExtAffWeyl& a, const Weight& lam,
                         long long p, ActionMode mode) {
    const Weight& rho = d.rho();
    switch (mode) {
        case ActionMode::plain:
            return d.w_act(a.fin, lam + a.trans);
        case ActionMode::dot:
            return d.w_act(a.fin, lam + rho + a.trans) - rho;
        case ActionMode::plain_p:
            return d.w_act(a.fin, lam + p * a.trans);
        case ActionMode::dot_p:
            return d.w_act(a.fin, lam + rho + p * a.trans) - rho;
    }
    fail(errc::usage, "bad action mode");
}

/// phi(w t^mu) = pi^{-1}(w) t^{p pi^{-1}(mu)}; here elements are stored as w t^nu,
/// so phi((w, nu)) = (pi^{-1} w pi, p pi^{-1}(nu)).
inline ExtAffWeyl phi(const RootDatum& d, const ExtAffWeyl& a, long long p) {
    return {d.pi_twist_inv(a.fin), p * d.pi_inv_act(a.trans)};
}

/// Canonical order for serialization: (length, translation lex, word lex).
inline bool canonical_less(const RootDatum& d, const ExtAffWeyl& a, const ExtAffWeyl& b) {
    long long la = aw_length(d, a), lb = aw_length(d, b);
    if (la != lb) return la < lb;
    if (a.trans != b.trans) return a.trans < b.trans;
    return a.fin.word < b.fin.word;
}

/// All elements of length <= maxlen in the coset omega W_aff (BFS over right
/// multiplication by affine simple reflections).
inline std::vector<ExtAffWeyl> length_ball(const RootDatum& d, const ExtAffWeyl& omega,
                                           long long maxlen) {
    std::vector<ExtAffWeyl> gens = affine_simple_reflections(d);
    std::set<ExtAffWeyl> seen{omega};
    std::vector<ExtAffWeyl> queue{omega};
    for (size_t q = 0; q < queue.size(); ++q) {
        for (const auto& g : gens) {
            ExtAffWeyl nxt = aw_mult(d, queue[q], g);
            if (aw_length(d, nxt) <= maxlen && seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace alcove
