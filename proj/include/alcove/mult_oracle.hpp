#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alcove/affine.hpp"

namespace alcove {

/// Canonical (u, nu) key: u has its translation part reduced mod X^0, nu absorbs the
/// shift (the pair labels the same simple module).
struct OracleKey {
    ExtAffWeyl u;
    Weight nu;
    bool operator<(const OracleKey& o) const {
        if (!(u == o.u)) return u < o.u;
        return nu < o.nu;
    }
    bool operator==(const OracleKey& o) const { return u == o.u && nu == o.nu; }
};

inline OracleKey canonical_key(const RootDatum& d, const ExtAffWeyl& u, const Weight& nu) {
    IVec red = detail::reduce_mod_lattice(u.trans, d.central_lattice());
    IVec c0 = u.trans - red;
    // u = u_can t^{c0} and (u, nu) ~ (u_can, nu + c0)
    return OracleKey{ExtAffWeyl{u.fin, red}, nu + c0};
}

/// Support criterion for baby-Verma constituents: (t^{-nu})_dom <= w0 t^{-rho} u.
inline bool oracle_support(const RootDatum& d, const ExtAffWeyl& u, const Weight& nu) {
    ExtAffWeyl lhs = dominant_rep(d, aw_translation(d, -nu));
    ExtAffWeyl bound = aw_mult(d, aw_mult(d, aw_fin(d.w_longest(), d.rank()),
                                          aw_translation(d, -d.rho())),
                               u);
    return bruhat_leq(d, lhs, bound);
}
/// Boundary case forcing multiplicity one: (t^{-nu})_dom = w0 t^{-rho} u.
inline bool oracle_boundary(const RootDatum& d, const ExtAffWeyl& u, const Weight& nu) {
    ExtAffWeyl lhs = dominant_rep(d, aw_translation(d, -nu));
    ExtAffWeyl bound = aw_mult(d, aw_mult(d, aw_fin(d.w_longest(), d.rank()),
                                          aw_translation(d, -d.rho())),
                               u);
    return lhs == bound;
}

/// Enumerates the nu with oracle_support(u, nu), from the lower interval of
/// w0 t^{-rho} u (finite: those interval elements that are dominant representatives
/// of translations).
inline std::vector<Weight> oracle_support_nus(const RootDatum& d, const ExtAffWeyl& u) {
    ExtAffWeyl bound = aw_mult(d, aw_mult(d, aw_fin(d.w_longest(), d.rank()),
                                          aw_translation(d, -d.rho())),
                               u);
    std::set<IVec> out;
    for (const auto& y : lower_interval(d, bound)) {
        ExtAffWeyl t = aw_translation(d, y.trans);
        if (dominant_rep(d, t) == y) out.insert(-y.trans);
    }
    return {out.begin(), out.end()};
}

/// Baby-Verma composition multiplicities m_{u,nu} = [Z-hat_1(p rho) : L-hat_1(u .p 0 + p nu)],
/// with a declared validity region (the set of covered u-classes for a fixed p and datum).
class MultOracle {
  public:
    MultOracle(const RootDatum& d, long long p, std::string source)
        : p_(p), datum_(d.name()), source_(std::move(source)) {}

    long long p() const { return p_; }
    const std::string& datum_id() const { return datum_; }
    const std::string& source() const { return source_; }
    const std::map<OracleKey, long long>& entries() const { return entries_; }
    const std::set<ExtAffWeyl>& region() const { return region_; }

    void add_region(const RootDatum& d, const ExtAffWeyl& u) {
        region_.insert(canonical_key(d, u, ivec_zero(d.rank())).u);
    }
    void add_entry(const RootDatum& d, const ExtAffWeyl& u, const Weight& nu, long long m) {
        check(m >= 0, errc::invariant_violation, "negative multiplicity");
        OracleKey k = canonical_key(d, u, nu);
        region_.insert(k.u);
        if (m != 0) entries_[k] += m;
    }

    /// Errors with OutOfRegion for uncovered u; with OracleGap for an in-region hole.
    /// Zeros forced by the support criterion are returned without consulting the table.
    long long lookup(const RootDatum& d, const ExtAffWeyl& u, const Weight& nu) const {
        check(d.name() == datum_, errc::out_of_region, "oracle bound to datum " + datum_);
        if (!oracle_support(d, u, nu)) return 0;
        OracleKey k = canonical_key(d, u, nu);
        check(region_.count(k.u) > 0, errc::out_of_region,
              "oracle does not cover this restricted class");
        auto it = entries_.find(k);
        if (it == entries_.end()) {
            if (oracle_boundary(d, u, nu))
                fail(errc::oracle_gap, "missing boundary entry");
            fail(errc::oracle_gap, "missing in-region entry");
        }
        return it->second;
    }

    /// Structural invariants: support-criterion zeros, boundary normalization one,
    /// pi-symmetry m_{pi u, pi nu} = m_{u, nu}.
    void validate(const RootDatum& d) const {
        for (const auto& [k, m] : entries_) {
            check(oracle_support(d, k.u, k.nu), errc::invariant_violation,
                  "entry violates the support criterion");
            if (oracle_boundary(d, k.u, k.nu))
                check(m == 1, errc::invariant_violation, "boundary multiplicity must be one");
        }
        for (const auto& u : region_)
            for (const auto& nu : oracle_support_nus(d, u))
                if (oracle_boundary(d, u, nu))
                    check(lookup(d, u, nu) == 1, errc::invariant_violation,
                          "boundary entry missing or not one");
        if (!d.pi_is_identity()) {
            for (const auto& [k, m] : entries_) {
                ExtAffWeyl pu{d.pi_twist(k.u.fin), d.pi_act(k.u.trans)};
                Weight pnu = d.pi_act(k.nu);
                check(lookup(d, pu, pnu) == m, errc::invariant_violation,
                      "pi-symmetry m_{pi u, pi nu} = m_{u,nu} violated");
            }
        }
    }

  private:
    long long p_;
    std::string datum_;
    std::string source_;
    std::set<ExtAffWeyl> region_;  // canonical restricted representatives covered
    std::map<OracleKey, long long> entries_;
};

namespace detail {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

/// Composition factors (highest weight, multiplicity) of the graded baby Verma module
/// of highest weight lambda for a semisimple-rank-one datum over F_p: explicit module
/// on the basis f^i v with the e-action nullspace computed per graded piece.
inline std::vector<std::pair<Weight, long long>> rank1_baby_verma_factors(const RootDatum& d,
                                                                          long long p,
                                                                          const Weight& lam) {
    const IVec& alpha = d.simple_roots()[0];       // the G-side coroot of the rank-1 triple
    const IVec& alpha_v = d.simple_coroots()[0];   // the G-side root: weight of e is alpha_v
    long long a = ((dot(lam, alpha) % p) + p) % p;  // h acts on v by a mod p
    // singular vectors: f^i v with e f^i v = i (a - i + 1) f^{i-1} v = 0 in F_p
    std::vector<long long> walls;
    for (long long i = 1; i < p; ++i) {
        long long c = (i % p) * (((a - i + 1) % p + p) % p) % p;
        if (c == 0) walls.push_back(i);
    }
    walls.push_back(p);
    std::vector<std::pair<Weight, long long>> factors;
    long long start = 0;
    for (long long w : walls) {
        // graded piece [start, w): simple with highest weight lam - start * alpha_v
        factors.emplace_back(lam - start * alpha_v, 1);
        start = w;
        if (start >= p) break;
    }
    return factors;
}

}  // namespace detail

/// Builds the rank-1 oracle by brute force over F_p and labels the factors by the
/// covering decomposition u .p 0 + p nu.
inline MultOracle rank1_oracle(const RootDatum& d, long long p, long long p_cap = 101) {
    check(d.ss_rank() == 1, errc::rank_unsupported, "built-in oracle is rank one only");
    check(detail::is_prime(p), errc::p_too_small, "p must be prime");
    check(p > 2 * d.h_rho(), errc::p_too_small, "need p > 2 h_rho");
    check(p <= p_cap, errc::p_too_small, "p exceeds the configured cap");
    MultOracle oracle(d, p, "rank1");
    std::vector<ExtAffWeyl> box = restricted_box(d);
    std::vector<ExtAffWeyl> reps;
    for (const auto& u : box) reps.push_back(canonical_key(d, u, ivec_zero(d.rank())).u);
    for (const auto& u : reps) oracle.add_region(d, u);
    Weight prho = p * d.rho();
    for (const auto& [hw, m] : detail::rank1_baby_verma_factors(d, p, prho)) {
        // match hw = u .p 0 + p nu for exactly one canonical u
        int hits = 0;
        for (const auto& u : reps) {
            Weight base = dot_action(d, u, ivec_zero(d.rank()), p, ActionMode::dot_p);
            Weight diff = hw - base;
            bool divisible = true;
            for (long long x : diff)
                if (x % p != 0) divisible = false;
            if (!divisible) continue;
            Weight nu(diff.size());
            for (size_t i = 0; i < diff.size(); ++i) nu[i] = diff[i] / p;
            oracle.add_entry(d, u, nu, m);
            ++hits;
        }
        check(hits == 1, errc::invariant_violation,
              "baby-Verma factor matched " + std::to_string(hits) + " restricted classes");
    }
    oracle.validate(d);
    return oracle;
}

/// Jantzen's generic decomposition pattern: the multiset
/// { (F(u .p (mu - rho + w pi nu)), m_{u,nu}) } over the oracle support.
inline std::vector<std::pair<Weight, long long>> jantzen_decomposition(
    const RootDatum& d, const FinWeyl& w, const Weight& mu, long long p,
    const MultOracle& oracle) {
    check(is_m_generic(d, mu, p, 2 * d.h_rho()), errc::not_generic,
          "jantzen_decomposition needs mu 2h_rho-generic");
    std::vector<std::pair<Weight, long long>> out;
    for (const auto& u : oracle.region()) {
        for (const auto& nu : oracle_support_nus(d, u)) {
            long long m = oracle.lookup(d, u, nu);
            if (m == 0) continue;
            Weight shift = mu - d.rho() + d.w_act(w, d.pi_act(nu));
            Weight hw = dot_action(d, u, shift, p, ActionMode::dot_p);
            out.emplace_back(hw, m);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace alcove
