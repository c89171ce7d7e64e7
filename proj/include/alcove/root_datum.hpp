#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alcove/errors.hpp"
#include "alcove/linalg.hpp"

namespace alcove {

/// Weight: element of X_*(T-check) ~ X^*(T), as integer coordinates.
using Weight = IVec;

/// Finite Weyl group element: lattice automorphism plus one stored reduced word.
struct FinWeyl {
    IMat mat;               // action on X_*(T-check)
    std::vector<int> word;  // reduced word in simple reflections (indices)

    size_t length() const { return word.size(); }
    int sgn() const { return word.size() % 2 == 0 ? 1 : -1; }
    bool operator==(const FinWeyl& o) const { return mat == o.mat; }
    bool operator!=(const FinWeyl& o) const { return mat != o.mat; }
    bool operator<(const FinWeyl& o) const { return mat < o.mat; }
};

/// Root datum of the dual group: pinned lattice-level data plus the cached
/// combinatorial layers (roots, finite Weyl group, base-alcove sample point)
/// every other module consumes.
class RootDatum {
  public:
    RootDatum(size_t rank, std::vector<IVec> simple_roots, std::vector<IVec> simple_coroots,
              IVec rho, IMat pi, std::string name = "explicit")
        : rank_(rank),
          simple_roots_(std::move(simple_roots)),
          simple_coroots_(std::move(simple_coroots)),
          rho_(std::move(rho)),
          pi_(std::move(pi)),
          name_(std::move(name)) {
        validate_shapes();
        validate_cartan();
        close_roots();
        enumerate_weyl();
        validate_rho();
        validate_pi();
        build_lattices();
        build_sample_point();
    }

    size_t rank() const { return rank_; }
    size_t ss_rank() const { return simple_roots_.size(); }
    const std::string& name() const { return name_; }
    const std::vector<IVec>& simple_roots() const { return simple_roots_; }
    const std::vector<IVec>& simple_coroots() const { return simple_coroots_; }
    const Weight& rho() const { return rho_; }
    const IMat& pi() const { return pi_; }

    /// <lam, alpha> for lam a weight and alpha a root (covector).
    long long pair(const Weight& lam, const IVec& root) const { return dot(lam, root); }

    /// Positive roots, ordered by (height, lex).
    const std::vector<IVec>& positive_roots() const { return positive_roots_; }
    /// Coroot of the i-th positive root.
    const IVec& positive_coroot(size_t i) const { return positive_coroots_[i]; }
    /// Coroot of an arbitrary root.
    IVec coroot_of(const IVec& chi) const {
        auto [i, s] = positive_index(chi);
        return s > 0 ? positive_coroots_[i] : -positive_coroots_[i];
    }
    bool is_root(const IVec& chi) const { return root_index_.count(chi) > 0; }
    bool is_positive_root(const IVec& chi) const {
        auto it = root_index_.find(chi);
        return it != root_index_.end() && it->second >= 0;
    }
    /// Index into positive_roots() for chi or -chi; sign +1 if chi positive.
    std::pair<int, int> positive_index(const IVec& chi) const {
        auto it = root_index_.find(chi);
        check(it != root_index_.end(), errc::schema_error, "not a root");
        return it->second >= 0 ? std::make_pair(it->second, 1)
                               : std::make_pair(-it->second - 1, -1);
    }

    const std::vector<FinWeyl>& weyl() const { return weyl_; }
    const FinWeyl& w_identity() const { return weyl_[0]; }
    const FinWeyl& w_longest() const { return weyl_[longest_]; }
    const FinWeyl& simple_reflection(size_t i) const { return simple_refs_[i]; }

    FinWeyl w_from_matrix(const IMat& m) const {
        auto it = weyl_index_.find(m.a);
        check(it != weyl_index_.end(), errc::schema_error, "matrix is not a Weyl element");
        return weyl_[it->second];
    }
    FinWeyl w_mult(const FinWeyl& a, const FinWeyl& b) const { return w_from_matrix(a.mat * b.mat); }
    FinWeyl w_inverse(const FinWeyl& a) const {
        auto it = weyl_index_.find(a.mat.a);
        check(it != weyl_index_.end(), errc::schema_error, "matrix is not a Weyl element");
        return weyl_[weyl_inverse_[it->second]];
    }
    /// Action of w on weights.
    Weight w_act(const FinWeyl& w, const Weight& lam) const { return w.mat.apply(lam); }
    RVec w_act(const FinWeyl& w, const RVec& x) const { return w.mat.apply(x); }
    /// Action of w on roots/covectors: chi -> chi o w^{-1}.
    IVec w_act_root(const FinWeyl& w, const IVec& chi) const {
        return w_inverse(w).mat.apply_transpose(chi);
    }

    /// pi as an operation on Weyl elements: w -> pi o w o pi^{-1}.
    FinWeyl pi_twist(const FinWeyl& w) const {
        return w_from_matrix(pi_ * w.mat * inverse_unimodular(pi_));
    }
    FinWeyl pi_twist_inv(const FinWeyl& w) const {
        return w_from_matrix(inverse_unimodular(pi_) * w.mat * pi_);
    }
    Weight pi_act(const Weight& v) const { return pi_.apply(v); }
    Weight pi_inv_act(const Weight& v) const { return inverse_unimodular(pi_).apply(v); }
    bool pi_is_identity() const { return pi_ == IMat::identity(rank_); }

    /// Exact rational interior point of the base alcove A0 (0 < <x0,alpha> < 1 for
    /// every positive root).
    const RVec& base_alcove_point() const { return x0_; }

    /// Canonical integral lifts of the fundamental coweights (one per simple root):
    /// the section recorded by the preset when there is one, otherwise the
    /// HNF-canonical representative. Errors with NoFundamentalCoweights if the
    /// lattice admits no lift.
    const IVec& fundamental_coweight(size_t i) const {
        check(i < ss_rank(), errc::schema_error, "fundamental coweight index");
        if (fund_coweights_.empty()) compute_fund_coweights();
        return fund_coweights_[i];
    }

    /// Installs the preset-recorded coweight section (validated).
    void set_coweight_section(std::vector<IVec> lifts) {
        check(lifts.size() == ss_rank(), errc::schema_error, "coweight section size");
        for (size_t i = 0; i < lifts.size(); ++i)
            for (size_t j = 0; j < ss_rank(); ++j)
                check(dot(lifts[i], simple_roots_[j]) == (i == j ? 1 : 0),
                      errc::schema_error, "coweight section does not pair correctly");
        fund_coweights_ = std::move(lifts);
    }

    /// HNF basis of the coroot lattice (for Omega-class computations).
    const std::vector<IVec>& coroot_lattice() const { return coroot_lattice_; }
    /// HNF basis of X^0 = {v : <v, alpha_i> = 0 for all simple i}.
    const std::vector<IVec>& central_lattice() const { return central_lattice_; }

    /// Canonical representative of v mod the coroot lattice.
    IVec coroot_class(const IVec& v) const { return detail::reduce_mod_lattice(v, coroot_lattice_); }
    /// Canonical representative of v mod X^0.
    IVec central_reduce(const IVec& v) const { return detail::reduce_mod_lattice(v, central_lattice_); }
    bool is_central(const IVec& v) const {
        for (const auto& a : simple_roots_)
            if (dot(v, a) != 0) return false;
        return true;
    }

    /// Highest roots, one per irreducible component of the root system.
    const std::vector<IVec>& highest_roots() const { return highest_roots_; }

    /// Sum over positive alpha of n_alpha where n_alpha = |<lam,alpha>| -- the height.
    long long height(const Weight& lam) const {
        long long h = 0;
        for (const auto& a : positive_roots_) h = std::max(h, std::abs(dot(lam, a)));
        return h;
    }
    long long h_rho() const { return height(rho_); }

    bool is_dominant(const Weight& lam) const {
        for (const auto& a : simple_roots_)
            if (dot(lam, a) < 0) return false;
        return true;
    }
    bool is_regular_dominant(const Weight& lam) const {
        for (const auto& a : simple_roots_)
            if (dot(lam, a) <= 0) return false;
        return true;
    }

    std::vector<Weight> weyl_orbit(const Weight& lam) const {
        std::set<IVec> seen{lam};
        std::vector<Weight> queue{lam};
        for (size_t q = 0; q < queue.size(); ++q) {
            for (size_t i = 0; i < ss_rank(); ++i) {
                Weight nu = w_act(simple_refs_[i], queue[q]);
                if (seen.insert(nu).second) queue.push_back(nu);
            }
        }
        std::vector<Weight> out(seen.begin(), seen.end());
        return out;
    }

    /// Word for an arbitrary Weyl matrix by left-descent induction.
    std::vector<int> word_of(const IMat& m) const {
        std::vector<int> out;
        IMat cur = m;
        IMat id = IMat::identity(rank_);
        size_t guard = 0;
        while (!(cur == id)) {
            check(++guard <= 4 * weyl_.size() + 16, errc::infinite_weyl, "descent did not terminate");
            bool found = false;
            for (size_t i = 0; i < ss_rank(); ++i) {
                // l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0 iff (cur^T alpha_i) negative.
                IVec chi = cur.apply_transpose(simple_roots_[i]);
                if (is_root(chi) && !is_positive_root(chi)) {
                    out.push_back(static_cast<int>(i));
                    cur = simple_refs_[i].mat * cur;
                    found = true;
                    break;
                }
            }
            check(found, errc::schema_error, "matrix is not in the Weyl group");
        }
        return out;
    }

  private:
    size_t rank_;
    std::vector<IVec> simple_roots_;
    std::vector<IVec> simple_coroots_;
    Weight rho_;
    IMat pi_;
    std::string name_;

    std::vector<IVec> positive_roots_;
    std::vector<IVec> positive_coroots_;
    std::map<IVec, int> root_index_;  // root -> i (positive) or -i-1 (negative of positives[i])
    std::vector<IVec> highest_roots_;
    std::vector<FinWeyl> simple_refs_;
    std::vector<FinWeyl> weyl_;
    std::map<std::vector<long long>, int> weyl_index_;
    std::vector<int> weyl_inverse_;
    size_t longest_ = 0;
    std::vector<IVec> coroot_lattice_;
    std::vector<IVec> central_lattice_;
    mutable std::vector<IVec> fund_coweights_;
    RVec x0_;

    void validate_shapes() {
        check(rank_ >= 1, errc::schema_error, "rank must be positive");
        check(simple_roots_.size() == simple_coroots_.size(), errc::schema_error,
              "roots/coroots count mismatch");
        for (const auto& v : simple_roots_)
            check(v.size() == rank_, errc::schema_error, "root length != rank");
        for (const auto& v : simple_coroots_)
            check(v.size() == rank_, errc::schema_error, "coroot length != rank");
        check(rho_.size() == rank_, errc::schema_error, "rho length != rank");
        check(pi_.rows == rank_ && pi_.cols == rank_, errc::pi_invalid, "pi shape");
    }

    void validate_cartan() {
        size_t k = ss_rank();
        std::vector<std::vector<long long>> c(k, std::vector<long long>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) c[i][j] = dot(simple_coroots_[i], simple_roots_[j]);
        for (size_t i = 0; i < k; ++i) {
            check(c[i][i] == 2, errc::cartan_mismatch, "diagonal entry != 2");
            for (size_t j = 0; j < k; ++j) {
                if (i == j) continue;
                check(c[i][j] <= 0, errc::cartan_mismatch, "positive off-diagonal entry");
                check((c[i][j] == 0) == (c[j][i] == 0), errc::cartan_mismatch,
                      "zero pattern not symmetric");
            }
        }
        // Symmetrize: d_i c_ij = d_j c_ji with d_i > 0, then require positive definiteness
        // (the finite-type criterion).
        std::vector<Rat> d(k, Rat(0));
        for (size_t s = 0; s < k; ++s) {
            if (d[s] != 0) continue;
            d[s] = 1;
            std::vector<size_t> queue{s};
            for (size_t q = 0; q < queue.size(); ++q) {
                size_t i = queue[q];
                for (size_t j = 0; j < k; ++j) {
                    if (c[i][j] == 0 || i == j) continue;
                    Rat need = d[i] * Rat(c[i][j]) / Rat(c[j][i]);
                    if (d[j] == 0) {
                        d[j] = need;
                        queue.push_back(j);
                    } else {
                        check(d[j] == need, errc::cartan_mismatch, "not symmetrizable");
                    }
                }
            }
        }
        // Leading principal minors of (d_i c_ij) must be positive.
        std::vector<std::vector<Rat>> s(k, std::vector<Rat>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) s[i][j] = d[i] * Rat(c[i][j]);
        for (size_t t = 1; t <= k; ++t) {
            std::vector<std::vector<Rat>> m(t, std::vector<Rat>(t));
            for (size_t i = 0; i < t; ++i)
                for (size_t j = 0; j < t; ++j) m[i][j] = s[i][j];
            Rat dt(1);
            for (size_t col = 0; col < t; ++col) {
                size_t piv = col;
                while (piv < t && m[piv][col] == 0) ++piv;
                check(piv < t, errc::cartan_mismatch, "Cartan matrix not of finite type");
                if (piv != col) {
                    std::swap(m[piv], m[col]);
                    dt = -dt;
                }
                dt *= m[col][col];
                for (size_t i = col + 1; i < t; ++i) {
                    Rat f = m[i][col] / m[col][col];
                    for (size_t j = col; j < t; ++j) m[i][j] -= f * m[col][j];
                }
            }
            check(dt > 0, errc::cartan_mismatch, "Cartan matrix not of finite type");
        }
        // Simple roots (and coroots) must be linearly independent.
        std::vector<RVec> rows;
        for (const auto& v : simple_roots_) {
            RVec r(rank_);
            for (size_t j = 0; j < rank_; ++j) r[j] = Rat(v[j]);
            rows.push_back(r);
        }
        size_t rk = 0;
        for (size_t cidx = 0; cidx < rank_ && rk < rows.size(); ++cidx) {
            size_t piv = rk;
            while (piv < rows.size() && rows[piv][cidx] == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[rk]);
            for (size_t i = rk + 1; i < rows.size(); ++i) {
                if (rows[i][cidx] == 0) continue;
                Rat f = rows[i][cidx] / rows[rk][cidx];
                for (size_t j = 0; j < rank_; ++j) rows[i][j] -= f * rows[rk][j];
            }
            ++rk;
        }
        check(rk == k, errc::cartan_mismatch, "simple roots not linearly independent");
    }

    IMat reflection_matrix(size_t i) const {
        IMat m = IMat::identity(rank_);
        for (size_t r = 0; r < rank_; ++r)
            for (size_t cidx = 0; cidx < rank_; ++cidx)
                m(r, cidx) -= simple_coroots_[i][r] * simple_roots_[i][cidx];
        return m;
    }

    void close_roots() {
        // Closure of simple roots under the dual reflections s_i(chi) = chi - <coroot_i,chi> root_i,
        // tracking the coroot alongside: s_i(v) = v - <v,alpha_i> coroot_i.
        std::map<IVec, IVec> root_to_coroot;
        std::vector<IVec> queue;
        for (size_t i = 0; i < ss_rank(); ++i) {
            root_to_coroot[simple_roots_[i]] = simple_coroots_[i];
            queue.push_back(simple_roots_[i]);
        }
        for (size_t q = 0; q < queue.size(); ++q) {
            for (size_t i = 0; i < ss_rank(); ++i) {
                IVec chi = queue[q];
                IVec v = root_to_coroot[chi];
                long long c = dot(simple_coroots_[i], chi);
                IVec img = chi - c * simple_roots_[i];
                IVec imgv = v - dot(v, simple_roots_[i]) * simple_coroots_[i];
                if (root_to_coroot.emplace(img, imgv).second) queue.push_back(img);
                check(root_to_coroot.size() <= 10000, errc::infinite_weyl,
                      "root closure exceeded bound");
            }
        }
        std::set<IVec> roots;
        for (const auto& [chi, v] : root_to_coroot) roots.insert(chi);
        // Split into positives (nonnegative rational combinations of simples) and negatives.
        std::vector<RVec> rows;  // transpose: columns are simple roots
        for (size_t j = 0; j < rank_; ++j) {
            RVec r(ss_rank());
            for (size_t i = 0; i < ss_rank(); ++i) r[i] = Rat(simple_roots_[i][j]);
            rows.push_back(r);
        }
        std::vector<std::pair<long long, IVec>> positives;
        for (const auto& chi : roots) {
            RVec b(rank_);
            for (size_t j = 0; j < rank_; ++j) b[j] = Rat(chi[j]);
            auto sol = rat_solve(rows, b);
            check(sol.has_value(), errc::cartan_mismatch, "root outside simple-root span");
            bool nonneg = std::all_of(sol->begin(), sol->end(), [](const Rat& q) { return q >= 0; });
            bool nonpos = std::all_of(sol->begin(), sol->end(), [](const Rat& q) { return q <= 0; });
            check(nonneg || nonpos, errc::cartan_mismatch, "root neither positive nor negative");
            if (nonneg) {
                Rat ht(0);
                for (const auto& q : *sol) ht += q;
                check(rat_den(ht) == 1, errc::cartan_mismatch, "non-integral root height");
                positives.emplace_back(static_cast<long long>(rat_num(ht)), chi);
            }
        }
        std::sort(positives.begin(), positives.end());
        for (const auto& [h, chi] : positives) {
            positive_roots_.push_back(chi);
            positive_coroots_.push_back(root_to_coroot.at(chi));
        }
        for (size_t i = 0; i < positive_roots_.size(); ++i) {
            root_index_[positive_roots_[i]] = static_cast<int>(i);
            root_index_[-positive_roots_[i]] = -static_cast<int>(i) - 1;
        }
        // Highest roots: positives maximal in their component (adding any simple root of the
        // same component never yields a root). Component = connected support in the Cartan graph.
        std::vector<int> comp(ss_rank(), -1);
        int ncomp = 0;
        for (size_t i = 0; i < ss_rank(); ++i) {
            if (comp[i] >= 0) continue;
            comp[i] = ncomp;
            std::vector<size_t> queue2{i};
            for (size_t q = 0; q < queue2.size(); ++q)
                for (size_t j = 0; j < ss_rank(); ++j)
                    if (comp[j] < 0 && dot(simple_coroots_[queue2[q]], simple_roots_[j]) != 0) {
                        comp[j] = ncomp;
                        queue2.push_back(j);
                    }
            ++ncomp;
        }
        simple_component_ = comp;
        for (int c = 0; c < ncomp; ++c) {
            // The highest root of component c is the unique positive root dominant for the
            // component and of maximal height.
            const IVec* best = nullptr;
            long long best_h = -1;
            for (size_t i = 0; i < positive_roots_.size(); ++i) {
                const IVec& chi = positive_roots_[i];
                // component of a root = component of any simple in its support
                int rc = -1;
                RVec b(rank_);
                for (size_t j = 0; j < rank_; ++j) b[j] = Rat(chi[j]);
                auto sol = rat_solve(rows, b);
                for (size_t s2 = 0; s2 < ss_rank(); ++s2)
                    if ((*sol)[s2] != 0) rc = comp[s2];
                if (rc != c) continue;
                long long h = 0;
                for (const auto& q : *sol) h += static_cast<long long>(rat_num(q)) / static_cast<long long>(rat_den(q));
                if (h > best_h) {
                    best_h = h;
                    best = &positive_roots_[i];
                }
            }
            if (best) highest_roots_.push_back(*best);
        }
    }

    void enumerate_weyl() {
        for (size_t i = 0; i < ss_rank(); ++i)
            simple_refs_.push_back(FinWeyl{reflection_matrix(i), {static_cast<int>(i)}});
        FinWeyl id{IMat::identity(rank_), {}};
        weyl_.push_back(id);
        weyl_index_[id.mat.a] = 0;
        // BFS by length; words are shortlex-minimal by construction.
        std::vector<size_t> frontier{0};
        const size_t cap = 2000000;
        while (!frontier.empty()) {
            std::vector<size_t> next;
            for (size_t idx : frontier) {
                for (size_t i = 0; i < ss_rank(); ++i) {
                    IMat m = weyl_[idx].mat * simple_refs_[i].mat;
                    if (weyl_index_.count(m.a)) continue;
                    FinWeyl w;
                    w.mat = m;
                    w.word = weyl_[idx].word;
                    w.word.push_back(static_cast<int>(i));
                    weyl_index_[m.a] = static_cast<int>(weyl_.size());
                    weyl_.push_back(w);
                    next.push_back(weyl_.size() - 1);
                    check(weyl_.size() <= cap, errc::infinite_weyl, "Weyl enumeration exceeded bound");
                }
            }
            frontier = std::move(next);
        }
        for (size_t i = 0; i < weyl_.size(); ++i)
            if (weyl_[i].word.size() > weyl_[longest_].word.size()) longest_ = i;
        weyl_inverse_.assign(weyl_.size(), -1);
        for (size_t i = 0; i < weyl_.size(); ++i) {
            if (weyl_inverse_[i] >= 0) continue;
            IMat inv = inverse_unimodular(weyl_[i].mat);
            int j = weyl_index_.at(inv.a);
            weyl_inverse_[i] = j;
            weyl_inverse_[j] = static_cast<int>(i);
        }
    }

    void validate_rho() {
        for (const auto& a : simple_roots_)
            check(dot(rho_, a) == 1, errc::cartan_mismatch, "rho does not pair to 1 with a simple root");
    }

    void validate_pi() {
        // pi permutes simple coroots, and the transpose permutes simple roots compatibly.
        std::vector<int> tau(ss_rank(), -1);
        for (size_t i = 0; i < ss_rank(); ++i) {
            IVec img = pi_.apply(simple_coroots_[i]);
            for (size_t j = 0; j < ss_rank(); ++j)
                if (img == simple_coroots_[j]) tau[i] = static_cast<int>(j);
            check(tau[i] >= 0, errc::pi_invalid, "pi does not permute simple coroots");
        }
        for (size_t i = 0; i < ss_rank(); ++i) {
            IVec chi = pi_.apply_transpose(simple_roots_[tau[i]]);
            check(chi == simple_roots_[i], errc::pi_invalid, "pi incompatible with pairing");
        }
        IMat power = pi_;
        IMat id = IMat::identity(rank_);
        size_t ord = 1;
        while (!(power == id)) {
            power = power * pi_;
            check(++ord <= 1024, errc::pi_invalid, "pi is not of finite order");
        }
    }

    void build_lattices() {
        coroot_lattice_ = detail::hnf_rows(simple_coroots_);
        central_lattice_ = detail::int_kernel(simple_roots_, rank_);
    }

    void build_sample_point() {
        x0_ = RVec(rank_, Rat(0));
        if (ss_rank() == 0) return;
        // Rational fundamental coweights (any solution works: only root pairings matter).
        RVec sum(rank_, Rat(0));
        for (size_t i = 0; i < ss_rank(); ++i) {
            std::vector<RVec> rows;
            RVec b(ss_rank(), Rat(0));
            for (size_t j = 0; j < ss_rank(); ++j) {
                RVec r(rank_);
                for (size_t c = 0; c < rank_; ++c) r[c] = Rat(simple_roots_[j][c]);
                rows.push_back(r);
                b[j] = (i == j) ? 1 : 0;
            }
            auto sol = rat_solve(rows, b);
            check(sol.has_value(), errc::schema_error, "no rational fundamental coweight");
            for (size_t c = 0; c < rank_; ++c) sum[c] += (*sol)[c];
        }
        long long maxh = 0;
        for (const auto& a : positive_roots_) {
            Rat h(0);
            for (size_t c = 0; c < rank_; ++c) h += sum[c] * Rat(a[c]);
            maxh = std::max(maxh, static_cast<long long>(rat_num(h) / rat_den(h)) + 1);
        }
        Rat scale = Rat(1) / Rat(maxh + 1);
        for (size_t c = 0; c < rank_; ++c) x0_[c] = sum[c] * scale;
    }

    void compute_fund_coweights() const {
        std::vector<IVec> out;
        for (size_t i = 0; i < ss_rank(); ++i) {
            IVec b(ss_rank(), 0);
            b[i] = 1;
            auto sol = detail::int_solve(simple_roots_, b);
            check(sol.has_value(), errc::no_fundamental_coweights,
                  "lattice contains no lift of fundamental coweight " + std::to_string(i));
            out.push_back(detail::reduce_mod_lattice(*sol, central_lattice_));
        }
        fund_coweights_ = std::move(out);
    }

    std::vector<int> simple_component_;
};

/// ---- presets -------------------------------------------------------------

namespace presets {

inline RootDatum gl(size_t n) {
    check(n >= 1, errc::schema_error, "GL_n needs n >= 1");
    std::vector<IVec> roots, coroots;
    for (size_t i = 0; i + 1 < n; ++i) {
        IVec a(n, 0);
        a[i] = 1;
        a[i + 1] = -1;
        roots.push_back(a);
        coroots.push_back(a);
    }
    IVec rho(n, 0);
    for (size_t i = 0; i < n; ++i) rho[i] = static_cast<long long>(n - 1 - i);
    RootDatum d(n, roots, coroots, rho, IMat::identity(n), "GL" + std::to_string(n));
    std::vector<IVec> section;
    for (size_t i = 0; i + 1 < n; ++i) {
        IVec om(n, 0);
        for (size_t j = 0; j <= i; ++j) om[j] = 1;
        section.push_back(om);
    }
    if (n >= 2) d.set_coweight_section(section);
    return d;
}

/// GSp_2n: symplectic similitude group. Lattice Z^{n+1}, last coordinate the
/// similitude character.
inline RootDatum gsp(size_t two_n) {
    check(two_n >= 4 && two_n % 2 == 0, errc::schema_error, "GSp_2n needs even 2n >= 4");
    size_t n = two_n / 2;
    size_t r = n + 1;
    std::vector<IVec> roots, coroots;
    for (size_t i = 0; i + 1 < n; ++i) {
        IVec a(r, 0), av(r, 0);
        a[i] = 1;
        a[i + 1] = -1;
        av[i] = 1;
        av[i + 1] = -1;
        roots.push_back(a);
        coroots.push_back(av);
    }
    IVec a(r, 0), av(r, 0);
    a[n - 1] = 2;
    a[n] = -1;
    av[n - 1] = 1;
    roots.push_back(a);
    coroots.push_back(av);
    IVec rho(r, 0);
    for (size_t i = 0; i < n; ++i) rho[i] = static_cast<long long>(n - i);
    rho[n] = 1;
    RootDatum d(r, roots, coroots, rho, IMat::identity(r), "GSp" + std::to_string(two_n));
    std::vector<IVec> section;
    for (size_t i = 0; i + 1 < n; ++i) {
        IVec om(r, 0);
        for (size_t j = 0; j <= i; ++j) om[j] = 1;
        section.push_back(om);
    }
    IVec last(r, 1);
    section.push_back(last);
    d.set_coweight_section(section);
    return d;
}

/// Simply-connected type X_n plus a central torus: coroots are the standard basis,
/// roots are the Cartan columns with a final central coordinate making rho integral.
inline RootDatum sc_plus_torus(char type, size_t n) {
    std::vector<std::vector<long long>> cartan(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i) cartan[i][i] = 2;
    auto link = [&](size_t i, size_t j, long long cij, long long cji) {
        cartan[i][j] = cij;
        cartan[j][i] = cji;
    };
    switch (type) {
        case 'A':
            for (size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            break;
        case 'B':  // alpha_n short
            check(n >= 2, errc::schema_error, "B_n needs n >= 2");
            for (size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 2, n - 1, -2, -1);
            break;
        case 'C':  // alpha_n long
            check(n >= 2, errc::schema_error, "C_n needs n >= 2");
            for (size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 2, n - 1, -1, -2);
            break;
        case 'D':
            check(n >= 3, errc::schema_error, "D_n needs n >= 3");
            for (size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 3, n - 1, -1, -1);
            break;
        case 'G':
            check(n == 2, errc::schema_error, "G_2 needs n = 2");
            link(0, 1, -1, -3);
            break;
        default:
            fail(errc::schema_error, "unsupported simply-connected type");
    }
    size_t r = n + 1;
    std::vector<IVec> roots, coroots;
    for (size_t j = 0; j < n; ++j) {
        IVec a(r, 0), av(r, 0);
        for (size_t i = 0; i < n; ++i) a[i] = cartan[i][j];
        a[n] = 1;
        av[j] = 1;
        roots.push_back(a);
        coroots.push_back(av);
    }
    IVec rho(r, 0);
    rho[n] = 1;
    return RootDatum(r, roots, coroots, rho, IMat::identity(r),
                     std::string("SC-") + type + std::to_string(n) + "+GL1");
}

}  // namespace presets

/// Builds a RootDatum from a preset name ("GL2", "GL_3", "GSp4", "Sp4-similitude",
/// "SC-C2+GL1", ...).
inline RootDatum build_root_datum(const std::string& name) {
    std::string s;
    for (char c : name)
        if (c != '_') s.push_back(c);
    if (s.rfind("GL", 0) == 0) return presets::gl(std::stoul(s.substr(2)));
    if (s.rfind("GSp", 0) == 0) return presets::gsp(std::stoul(s.substr(3)));
    if (s.rfind("Sp", 0) == 0 && s.find("-similitude") != std::string::npos)
        return presets::gsp(std::stoul(s.substr(2, s.find('-') - 2)));
    if (s.rfind("SC-", 0) == 0) {
        char type = s[3];
        size_t plus = s.find('+');
        check(plus != std::string::npos, errc::schema_error, "preset: expected SC-Xn+GL1");
        size_t n = std::stoul(s.substr(4, plus - 4));
        return presets::sc_plus_torus(type, n);
    }
    fail(errc::schema_error, "unknown preset: " + name);
}

}  // namespace alcove
