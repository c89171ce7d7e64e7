#pragma once

#include <map>
#include <vector>

#include "alcove/affine.hpp"

namespace alcove {

/// Element of the group ring Z[X^*(T)]: finite weight -> multiplicity map.
class CharacterQ {
  public:
    CharacterQ() = default;

    const std::map<Weight, long long>& terms() const { return terms_; }
    bool operator==(const CharacterQ& o) const { return terms_ == o.terms_; }
    bool operator!=(const CharacterQ& o) const { return !(*this == o); }

    void add_term(const Weight& mu, long long c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(mu, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    long long coeff(const Weight& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? 0 : it->second;
    }
    CharacterQ operator*(const CharacterQ& o) const {
        CharacterQ r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, c1 * c2);
        return r;
    }
    CharacterQ operator+(const CharacterQ& o) const {
        CharacterQ r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    long long total() const {
        long long t = 0;
        for (const auto& [m, c] : terms_) t += c;
        return t;
    }
    bool is_w_invariant(const RootDatum& d) const {
        for (const auto& [m, c] : terms_)
            for (const auto& w : d.weyl())
                if (coeff(d.w_act(w, m)) != c) return false;
        return true;
    }

  private:
    std::map<Weight, long long> terms_;
};

namespace detail {

/// The dual group's roots live on the G-side as coroots; for weight combinatorics of
/// Weyl modules of G, the role of (roots, coroots) flips: G-positive roots are the
/// datum's positive coroots.
inline Rat winv_form(const RootDatum& d, const RVec& x, const RVec& y) {
    // B(x,y) = sum over datum roots alpha of <x,alpha><y,alpha>; W-invariant,
    // kernel = central directions (irrelevant: all arguments differ by coroots).
    Rat s(0);
    for (const auto& a : d.positive_roots()) {
        Rat xa(0), ya(0);
        for (size_t i = 0; i < d.rank(); ++i) {
            xa += x[i] * Rat(a[i]);
            ya += y[i] * Rat(a[i]);
        }
        s += 2 * xa * ya;
    }
    return s;
}

inline RVec to_rvec(const Weight& v) {
    RVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

/// Dominant W-orbit representative of a weight.
inline Weight dominant_weight(const RootDatum& d, Weight mu) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i < d.ss_rank(); ++i)
            if (dot(mu, d.simple_roots()[i]) < 0) {
                mu = d.w_act(d.simple_reflection(i), mu);
                moved = true;
            }
    }
    return mu;
}

/// lambda - mu as a nonnegative integer combination of simple coroots, if it is one.
inline std::optional<IVec> coroot_cone_coords(const RootDatum& d, const Weight& lam,
                                              const Weight& mu) {
    std::vector<RVec> rows;
    size_t k = d.ss_rank();
    for (size_t j = 0; j < d.rank(); ++j) {
        RVec r(k);
        for (size_t i = 0; i < k; ++i) r[i] = Rat(d.simple_coroots()[i][j]);
        rows.push_back(r);
    }
    RVec b(d.rank());
    for (size_t j = 0; j < d.rank(); ++j) b[j] = Rat(lam[j] - mu[j]);
    auto sol = rat_solve(rows, b);
    if (!sol) return std::nullopt;
    // consistency: the solution must reproduce b exactly (rat_solve checks) and be a
    // nonnegative integer vector
    IVec c(k);
    for (size_t i = 0; i < k; ++i) {
        if ((*sol)[i] < 0 || rat_den((*sol)[i]) != 1) return std::nullopt;
        c[i] = static_cast<long long>(rat_num((*sol)[i]));
    }
    return c;
}

inline bool dominance_leq(const RootDatum& d, const Weight& mu, const Weight& lam) {
    return coroot_cone_coords(d, lam, mu).has_value();
}

}  // namespace detail

/// Full character of the Weyl module W(lambda) by the Freudenthal recursion.
inline CharacterQ weight_multiplicities(const RootDatum& d, const Weight& lam) {
    check(d.is_dominant(lam), errc::not_dominant, "weight_multiplicities: lambda not dominant");
    CharacterQ ch;
    if (d.ss_rank() == 0) {
        ch.add_term(lam, 1);
        return ch;
    }
    // delta = half sum of positive datum coroots (the G-side rho)
    RVec delta(d.rank(), Rat(0));
    for (size_t i = 0; i < d.positive_roots().size(); ++i)
        for (size_t j = 0; j < d.rank(); ++j)
            delta[j] += Rat(d.positive_coroot(i)[j]) / 2;
    // depth bound: the cone coordinates of lam - mu sum to at most the coordinates of
    // lam - w0(lam)
    long long depth_bound = 1;
    {
        std::vector<RVec> m;
        for (size_t c = 0; c < d.rank(); ++c) {
            RVec r(d.ss_rank());
            for (size_t j = 0; j < d.ss_rank(); ++j) r[j] = Rat(d.simple_coroots()[j][c]);
            m.push_back(r);
        }
        Weight span = lam - d.w_act(d.w_longest(), lam);
        RVec b(d.rank());
        for (size_t c = 0; c < d.rank(); ++c) b[c] = Rat(span[c]);
        auto sol = rat_solve(m, b);
        check(sol.has_value(), errc::schema_error, "depth bound solve failed");
        Rat t(0);
        for (const auto& q : *sol) t += q;
        depth_bound = static_cast<long long>(rat_floor(t)) + 1;
    }
    // enumerate dominant mu <= lam by increasing depth
    std::vector<std::pair<long long, Weight>> dominants;
    {
        std::vector<IVec> combos{IVec(d.ss_rank(), 0)};
        for (size_t i = 0; i < d.ss_rank(); ++i) {
            std::vector<IVec> next;
            for (const auto& c : combos) {
                long long used = 0;
                for (long long v : c) used += v;
                for (long long v = 0; used + v <= depth_bound; ++v) {
                    IVec c2 = c;
                    c2[i] = v;
                    next.push_back(c2);
                }
            }
            combos = std::move(next);
        }
        for (const auto& c : combos) {
            Weight mu = lam;
            long long depth = 0;
            for (size_t i = 0; i < d.ss_rank(); ++i) {
                mu = mu - c[i] * d.simple_coroots()[i];
                depth += c[i];
            }
            if (d.is_dominant(mu)) dominants.emplace_back(depth, mu);
        }
    }
    std::sort(dominants.begin(), dominants.end());
    std::map<Weight, long long> mult;  // dominant weights only
    Rat norm_lam = detail::winv_form(d, detail::to_rvec(lam) + delta, detail::to_rvec(lam) + delta);
    auto lookup = [&](const Weight& nu) -> long long {
        auto it = mult.find(detail::dominant_weight(d, nu));
        return it == mult.end() ? 0 : it->second;
    };
    for (const auto& [depth, mu] : dominants) {
        if (depth == 0) {
            mult[mu] = 1;
            continue;
        }
        Rat denom = norm_lam - detail::winv_form(d, detail::to_rvec(mu) + delta,
                                                 detail::to_rvec(mu) + delta);
        Rat num(0);
        for (size_t i = 0; i < d.positive_roots().size(); ++i) {
            const IVec& a = d.positive_coroot(i);
            for (long long k = 1; k <= depth_bound; ++k) {
                Weight nu = mu + k * a;
                long long m = lookup(nu);
                if (m != 0)
                    num += Rat(2 * m) *
                           detail::winv_form(d, detail::to_rvec(nu), detail::to_rvec(a));
            }
        }
        if (denom == 0) {
            check(num == 0, errc::schema_error, "Freudenthal: zero denominator");
            continue;
        }
        Rat q = num / denom;
        check(rat_den(q) == 1 && q >= 0, errc::schema_error, "Freudenthal: non-integral value");
        long long m = static_cast<long long>(rat_num(q));
        if (m != 0) mult[mu] = m;
    }
    for (const auto& [mu, m] : mult)
        for (const auto& nu : d.weyl_orbit(mu)) ch.add_term(nu, m);
    return ch;
}

/// Weyl dimension formula, as the independent cross-check for the Freudenthal route.
inline Int weyl_dimension(const RootDatum& d, const Weight& lam) {
    check(d.is_dominant(lam), errc::not_dominant, "weyl_dimension: lambda not dominant");
    Rat dim(1);
    for (const auto& a : d.positive_roots())
        dim *= Rat(dot(lam + d.rho(), a)) / Rat(dot(d.rho(), a));
    check(rat_den(dim) == 1, errc::schema_error, "Weyl dimension not integral");
    return rat_num(dim);
}

/// Exact group-ring identity: sum_w sgn(w) e^{w(lam+rho)} equals
/// (sum_mu m_mu(lam) e^mu) * (sum_w sgn(w) e^{w rho}).
inline bool weyl_identity_check(const RootDatum& d, const Weight& lam) {
    check(d.is_dominant(lam), errc::not_dominant, "weyl_identity_check: lambda not dominant");
    CharacterQ lhs, denom;
    for (const auto& w : d.weyl()) {
        lhs.add_term(d.w_act(w, lam + d.rho()), w.sgn());
        denom.add_term(d.w_act(w, d.rho()), w.sgn());
    }
    CharacterQ rhs = weight_multiplicities(d, lam) * denom;
    return lhs == rhs;
}

}  // namespace alcove
