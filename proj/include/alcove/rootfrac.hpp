#pragma once

#include <map>

#include "alcove/affine.hpp"
#include "alcove/polyq.hpp"

namespace alcove {

/// Element of Frac(S) with denominator a product of positive-root linear forms,
/// kept factored. Canonical form: the numerator shares no linear factor with the
/// denominator (enforced by exact division).
class RootFrac {
  public:
    RootFrac() = default;
    RootFrac(const RootDatum& d, PolyQ num) : num_(std::move(num)) { (void)d; }

    static RootFrac zero(const RootDatum& d) { return RootFrac(d, PolyQ(d.rank())); }
    static RootFrac constant(const RootDatum& d, const Rat& c) {
        return RootFrac(d, PolyQ::constant(d.rank(), c));
    }
    static RootFrac from_poly(const RootDatum& d, PolyQ p) { return RootFrac(d, std::move(p)); }

    const PolyQ& num() const { return num_; }
    const std::map<int, long long>& poles() const { return poles_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RootFrac& o) const { return num_ == o.num_ && poles_ == o.poles_; }
    bool operator!=(const RootFrac& o) const { return !(*this == o); }

    RootFrac operator-() const {
        RootFrac r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RootFrac add(const RootDatum& d, const RootFrac& o) const {
        std::map<int, long long> all = poles_;
        for (const auto& [i, m] : o.poles_) all[i] = std::max(all.count(i) ? all[i] : 0, m);
        PolyQ a = num_, b = o.num_;
        for (const auto& [i, m] : all) {
            long long ma = poles_.count(i) ? poles_.at(i) : 0;
            long long mb = o.poles_.count(i) ? o.poles_.at(i) : 0;
            PolyQ form = PolyQ::linear_form(d.positive_roots()[i]);
            for (long long k = ma; k < m; ++k) a = a * form;
            for (long long k = mb; k < m; ++k) b = b * form;
        }
        RootFrac r;
        r.num_ = a + b;
        r.poles_ = all;
        r.normalize(d);
        return r;
    }
    RootFrac sub(const RootDatum& d, const RootFrac& o) const { return add(d, -o); }

    RootFrac mul(const RootDatum& d, const RootFrac& o) const {
        RootFrac r;
        r.num_ = num_ * o.num_;
        r.poles_ = poles_;
        for (const auto& [i, m] : o.poles_) r.poles_[i] += m;
        r.normalize(d);
        return r;
    }
    RootFrac scale(const RootDatum& d, const Rat& c) const {
        RootFrac r = *this;
        r.num_ = r.num_ * c;
        if (c == 0) r.poles_.clear();
        (void)d;
        return r;
    }

    /// 1 / (product of dalpha^mult over the given positive-root indices).
    static RootFrac inverse_form(const RootDatum& d, const std::map<int, long long>& poles) {
        RootFrac r;
        r.num_ = PolyQ::one(d.rank());
        r.poles_ = poles;
        r.normalize(d);
        return r;
    }

    /// Largest pole order along ker(d chi) for the root chi (0 if no pole).
    long long pole_order(const RootDatum& d, const IVec& chi) const {
        auto [i, s] = d.positive_index(chi);
        auto it = poles_.find(i);
        return it == poles_.end() ? 0 : it->second;
    }

    /// Multiplies through by the polynomial q (used to extract Euler multiplicities).
    RootFrac mul_poly(const RootDatum& d, const PolyQ& q) const {
        RootFrac r = *this;
        r.num_ = r.num_ * q;
        r.normalize(d);
        return r;
    }

    void normalize(const RootDatum& d) {
        if (num_.is_zero()) {
            poles_.clear();
            return;
        }
        for (auto it = poles_.begin(); it != poles_.end();) {
            check(it->second > 0, errc::schema_error, "nonpositive pole multiplicity");
            const IVec& root = d.positive_roots()[it->first];
            while (it->second > 0) {
                auto q = num_.divide_by_linear(root);
                if (!q) break;
                num_ = *q;
                --it->second;
            }
            if (it->second == 0)
                it = poles_.erase(it);
            else
                ++it;
        }
    }

  private:
    PolyQ num_;
    std::map<int, long long> poles_;  // positive-root index -> multiplicity
};

/// beta = product of the positive-root linear forms.
inline PolyQ beta_poly(const RootDatum& d) {
    PolyQ b = PolyQ::one(d.rank());
    for (const auto& a : d.positive_roots()) b = b * PolyQ::linear_form(a);
    return b;
}
inline RootFrac beta(const RootDatum& d) { return RootFrac::from_poly(d, beta_poly(d)); }

/// 1/beta as a RootFrac.
inline RootFrac inv_beta(const RootDatum& d) {
    std::map<int, long long> poles;
    for (size_t i = 0; i < d.positive_roots().size(); ++i) poles[static_cast<int>(i)] = 1;
    return RootFrac::inverse_form(d, poles);
}

/// Coefficient twist of the monodromy-centralizer action: the finite Weyl part acts
/// naturally on Frac(S), the translation part acts trivially (the coefficient twist
/// factors through the finite quotient; lattice translations act trivially on t).
inline RootFrac act_weyl_on_frac(const RootDatum& d, const FinWeyl& w, const RootFrac& f) {
    IMat winv = d.w_inverse(w).mat;
    Rat sign(1);
    std::map<int, long long> poles;
    for (const auto& [i, m] : f.poles()) {
        IVec img = d.w_act_root(w, d.positive_roots()[i]);
        auto [j, s] = d.positive_index(img);
        poles[j] += m;
        if (s < 0 && m % 2 == 1) sign = -sign;
    }
    PolyQ num = f.num().compose(winv) * sign;
    RootFrac out = RootFrac::from_poly(d, num);
    return out.mul(d, RootFrac::inverse_form(d, poles));
}

inline RootFrac act_ext_on_frac(const RootDatum& d, const ExtAffWeyl& a, const RootFrac& f) {
    return act_weyl_on_frac(d, a.fin, f);
}

/// Exact rational function num/den used for residues on a hyperplane; den is a
/// nonzero polynomial in the surviving coordinates.
struct RatFunc {
    PolyQ num;
    PolyQ den;

    bool is_zero() const { return num.is_zero(); }
    RatFunc add(const RatFunc& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        return {num * o.den + o.num * den, den * o.den};
    }
    bool equals(const RatFunc& o) const { return (num * o.den) == (o.num * den); }
};

/// Residue of f along ker(d alpha), with the orientation fixed by
/// omega_top = dx_1 ^ ... ^ dx_r: eliminate the pivot coordinate (highest index with
/// nonzero coefficient in d alpha) and take the one-variable residue there.
/// Zero when d alpha does not divide the denominator; HigherOrderPole if the pole
/// order exceeds one.
inline RatFunc residue(const RootDatum& d, const RootFrac& f, const IVec& alpha) {
    size_t n = d.rank();
    auto [idx, s] = d.positive_index(alpha);
    const IVec& form = d.positive_roots()[idx];
    long long ord = f.pole_order(d, alpha);
    check(ord <= 1, errc::higher_order_pole, "pole order exceeds one along the hyperplane");
    if (ord == 0) return {PolyQ(n), PolyQ::one(n)};
    size_t piv = 0;
    for (size_t i = 0; i < n; ++i)
        if (form[i] != 0) piv = i;
    Rat c(form[piv]);
    RVec sub(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
        if (i != piv) sub[i] = Rat(-form[i]) / c;
    PolyQ g = f.num().substitute_var(piv, sub);
    PolyQ h = PolyQ::one(n);
    for (const auto& [i, m] : f.poles()) {
        if (i == idx) continue;
        PolyQ lf = PolyQ::linear_form(d.positive_roots()[i]).substitute_var(piv, sub);
        for (long long k = 0; k < m; ++k) h = h * lf;
    }
    check(!h.is_zero(), errc::higher_order_pole, "denominator vanishes on the hyperplane");
    Rat orient = (piv % 2 == 0) ? Rat(1) : Rat(-1);
    return {g * orient, h * c};
}

}  // namespace alcove
