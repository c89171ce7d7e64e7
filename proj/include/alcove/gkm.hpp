#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "alcove/rootfrac.hpp"

namespace alcove {

/// Localized equivariant class: finitely supported map from the fixed points
/// (elements of the extended affine Weyl group) to Frac(S).
class GKMClass {
  public:
    GKMClass() = default;

    const std::map<ExtAffWeyl, RootFrac>& support() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool operator==(const GKMClass& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const GKMClass& o) const { return !(*this == o); }

    void set(const ExtAffWeyl& x, RootFrac f) {
        if (f.is_zero())
            coeffs_.erase(x);
        else
            coeffs_[x] = std::move(f);
    }
    RootFrac coeff(const RootDatum& d, const ExtAffWeyl& x) const {
        auto it = coeffs_.find(x);
        return it == coeffs_.end() ? RootFrac::zero(d) : it->second;
    }

    GKMClass add(const RootDatum& d, const GKMClass& o) const {
        GKMClass r = *this;
        for (const auto& [x, f] : o.coeffs_) {
            auto it = r.coeffs_.find(x);
            if (it == r.coeffs_.end()) {
                r.coeffs_[x] = f;
            } else {
                RootFrac s = it->second.add(d, f);
                if (s.is_zero())
                    r.coeffs_.erase(it);
                else
                    it->second = std::move(s);
            }
        }
        return r;
    }
    GKMClass sub(const RootDatum& d, const GKMClass& o) const { return add(d, o.negate()); }
    GKMClass negate() const {
        GKMClass r = *this;
        for (auto& [x, f] : r.coeffs_) f = -f;
        return r;
    }
    GKMClass scale(const RootDatum& d, const Rat& c) const {
        GKMClass r;
        if (c == 0) return r;
        for (const auto& [x, f] : coeffs_) r.coeffs_[x] = f.scale(d, c);
        return r;
    }

  private:
    std::map<ExtAffWeyl, RootFrac> coeffs_;
};

/// Monodromy-centralizer action (left): support moves by left multiplication, the
/// coefficient is twisted through the finite Weyl quotient.
inline GKMClass act_dot(const RootDatum& d, const ExtAffWeyl& wt, const GKMClass& c) {
    GKMClass r;
    for (const auto& [x, f] : c.support()) r.set(aw_mult(d, wt, x), act_ext_on_frac(d, wt, f));
    return r;
}

/// Affine Springer action (right): support moves by right multiplication, the
/// coefficients are untouched.
inline GKMClass act_bullet(const RootDatum& d, const GKMClass& c, const ExtAffWeyl& wt) {
    GKMClass r;
    for (const auto& [x, f] : c.support()) r.set(aw_mult(d, x, wt), f);
    return r;
}

/// Equivariant fundamental class of the flag variety: sum over W of sgn(w)/beta [w].
inline GKMClass flag_class(const RootDatum& d) {
    GKMClass r;
    RootFrac ib = inv_beta(d);
    for (const auto& w : d.weyl())
        r.set(aw_fin(w, d.rank()), ib.scale(d, Rat(w.sgn())));
    return r;
}

/// The limit cycle class (1/beta) sum over W of sgn(w) [t^{w rho}]: simultaneously the
/// localized limit of the basic cycle and the localized baby-Verma class.
inline GKMClass rho_limit_class(const RootDatum& d) {
    GKMClass r;
    RootFrac ib = inv_beta(d);
    for (const auto& w : d.weyl())
        r.set(aw_translation(d, d.w_act(w, d.rho())), ib.scale(d, Rat(w.sgn())));
    return r;
}

/// (1/beta) sum over W of sgn(w) [t^{w lambda}] for regular dominant lambda.
inline GKMClass lambda_class(const RootDatum& d, const Weight& lam) {
    check(d.is_regular_dominant(lam), errc::not_regular_dominant,
          "lambda_class needs a regular dominant weight");
    GKMClass r;
    RootFrac ib = inv_beta(d);
    for (const auto& w : d.weyl())
        r.set(aw_translation(d, d.w_act(w, lam)), ib.scale(d, Rat(w.sgn())));
    return r;
}

/// Three fixed points on one connected component of a codimension-one fixed locus
/// meeting Adm(rho), with the character cutting it out.
struct OrbitTriple {
    std::array<ExtAffWeyl, 3> points;
    IVec character;  // a W-translate of a simple root
};

/// For each w in W and simple alpha with w s_alpha > w: the triple
/// (t^{w rho}, w t^{rho} s_alpha w^{-1}, t^{w s_alpha rho}) with character w(alpha).
inline std::vector<OrbitTriple> gen_rho_orbit_triples(const RootDatum& d) {
    std::vector<OrbitTriple> out;
    ExtAffWeyl trho = aw_translation(d, d.rho());
    for (const auto& w : d.weyl()) {
        for (size_t i = 0; i < d.ss_rank(); ++i) {
            const FinWeyl& sa = d.simple_reflection(i);
            FinWeyl wsa = d.w_mult(w, sa);
            if (wsa.length() <= w.length()) continue;
            ExtAffWeyl aw_w = aw_fin(w, d.rank());
            ExtAffWeyl conj = aw_mult(d, aw_mult(d, aw_mult(d, aw_w, trho), aw_fin(sa, d.rank())),
                                      aw_inverse(d, aw_w));
            OrbitTriple t;
            t.points = {aw_translation(d, d.w_act(w, d.rho())), conj,
                        aw_translation(d, d.w_act(wsa, d.rho()))};
            t.character = d.w_act_root(w, d.simple_roots()[i]);
            out.push_back(t);
        }
    }
    return out;
}

struct ResidueReport {
    bool ok = true;
    std::vector<size_t> violating;  // indices of failed triples
};

/// GKM residue condition: the residues of the three coefficients along the triple's
/// hyperplane must sum to zero.
inline ResidueReport check_residues(const RootDatum& d, const GKMClass& c,
                                    const std::vector<OrbitTriple>& triples) {
    ResidueReport rep;
    for (size_t i = 0; i < triples.size(); ++i) {
        RatFunc sum{PolyQ(d.rank()), PolyQ::one(d.rank())};
        for (const auto& x : triples[i].points)
            sum = sum.add(residue(d, c.coeff(d, x), triples[i].character));
        if (!sum.is_zero()) {
            rep.ok = false;
            rep.violating.push_back(i);
        }
    }
    return rep;
}

enum class Recognition {
    pass,
    fail_translation_support,  // support contains a non-translation
    fail_adm_support,          // support leaves Adm(rho)
    fail_normalization,        // coefficient at t^rho is not 1/beta
};

inline const char* recognition_name(Recognition r) {
    switch (r) {
        case Recognition::pass: return "pass";
        case Recognition::fail_translation_support: return "fail(support: non-translation)";
        case Recognition::fail_adm_support: return "fail(support: outside Adm(rho))";
        case Recognition::fail_normalization: return "fail(normalization at t^rho)";
    }
    return "?";
}

/// Recognition-principle verifier with the admissible set cached per datum.
class GkmVerifier {
  public:
    explicit GkmVerifier(const RootDatum& d) : d_(d) {
        auto a = adm(d, d.rho());
        adm_rho_ = std::set<ExtAffWeyl>(a.begin(), a.end());
    }

    const std::set<ExtAffWeyl>& adm_rho() const { return adm_rho_; }

    Recognition recognition_check(const GKMClass& c) const {
        for (const auto& [x, f] : c.support())
            if (!(x.fin == d_.w_identity())) return Recognition::fail_translation_support;
        for (const auto& [x, f] : c.support())
            if (!adm_rho_.count(x)) return Recognition::fail_adm_support;
        if (!(c.coeff(d_, aw_translation(d_, d_.rho())) == inv_beta(d_)))
            return Recognition::fail_normalization;
        return Recognition::pass;
    }

    /// Component multiplicity at t^{w rho}: a_{t^{w rho}} * beta * sgn(w); must be a
    /// pole-free (polynomial) value. Errors: SupportViolation if the support exceeds
    /// Adm(rho); NonPolynomial if a pole survives.
    RootFrac euler_component_coeff(const GKMClass& c, const FinWeyl& w) const {
        for (const auto& [x, f] : c.support())
            check(adm_rho_.count(x) > 0, errc::support_violation,
                  "class support exceeds Adm(rho)");
        RootFrac a = c.coeff(d_, aw_translation(d_, d_.w_act(w, d_.rho())));
        RootFrac m = a.mul_poly(d_, beta_poly(d_)).scale(d_, Rat(w.sgn()));
        check(m.poles().empty(), errc::non_polynomial, "component multiplicity has a pole");
        return m;
    }

  private:
    const RootDatum& d_;
    std::set<ExtAffWeyl> adm_rho_;
};

}  // namespace alcove
