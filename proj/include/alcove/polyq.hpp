#pragma once

#include <map>
#include <vector>

#include "alcove/linalg.hpp"

namespace alcove {

/// Element of S = Sym(t*): exact multivariate polynomial over Q, exponent vectors
/// keyed against the coordinate basis dual to the lattice basis.
class PolyQ {
  public:
    PolyQ() = default;
    explicit PolyQ(size_t nvars) : nvars_(nvars) {}

    static PolyQ constant(size_t nvars, const Rat& c) {
        PolyQ p(nvars);
        if (c != 0) p.terms_[IVec(nvars, 0)] = c;
        return p;
    }
    static PolyQ one(size_t nvars) { return constant(nvars, Rat(1)); }
    /// The linear form sum_i chi[i] x_i attached to a (co)vector chi.
    static PolyQ linear_form(const IVec& chi) {
        PolyQ p(chi.size());
        for (size_t i = 0; i < chi.size(); ++i) {
            if (chi[i] == 0) continue;
            IVec e(chi.size(), 0);
            e[i] = 1;
            p.terms_[e] = Rat(chi[i]);
        }
        return p;
    }

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<IVec, Rat>& terms() const { return terms_; }
    bool operator==(const PolyQ& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolyQ& o) const { return !(*this == o); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_vec(terms_.begin()->first));
    }
    Rat constant_value() const {
        check(is_constant(), errc::schema_error, "poly is not constant");
        return terms_.empty() ? Rat(0) : terms_.begin()->second;
    }

    PolyQ& operator+=(const PolyQ& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    PolyQ operator+(const PolyQ& o) const {
        PolyQ r = *this;
        r += o;
        return r;
    }
    PolyQ operator-() const {
        PolyQ r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    PolyQ operator-(const PolyQ& o) const { return *this + (-o); }
    PolyQ operator*(const PolyQ& o) const {
        PolyQ r(nvars_ ? nvars_ : o.nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    PolyQ operator*(const Rat& c) const {
        PolyQ r(nvars_);
        if (c == 0) return r;
        r.terms_ = terms_;
        for (auto& [e, v] : r.terms_) v *= c;
        return r;
    }

    void add_term(const IVec& e, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        if (nvars_ == 0) nvars_ = e.size();
    }

    long long degree_in(size_t var) const {
        long long deg = 0;
        for (const auto& [e, c] : terms_) deg = std::max(deg, e[var]);
        return deg;
    }

    /// Substitutes variable `var` by the linear form sum_i coeffs[i] x_i (which must
    /// not involve `var`).
    PolyQ substitute_var(size_t var, const RVec& coeffs) const {
        PolyQ lf(nvars_);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            IVec e(nvars_, 0);
            e[i] = 1;
            lf.add_term(e, coeffs[i]);
        }
        PolyQ out(nvars_);
        for (const auto& [e, c] : terms_) {
            PolyQ t = constant(nvars_, c);
            IVec rest = e;
            long long k = rest[var];
            rest[var] = 0;
            t = t * monomial(nvars_, rest);
            for (long long i = 0; i < k; ++i) t = t * lf;
            out += t;
        }
        return out;
    }

    /// f(Mx) for an integer matrix: variable j is replaced by row j of M applied to x.
    PolyQ compose(const IMat& m) const {
        PolyQ out(nvars_);
        std::vector<PolyQ> forms;
        for (size_t j = 0; j < nvars_; ++j) {
            IVec row(nvars_);
            for (size_t k = 0; k < nvars_; ++k) row[k] = m(j, k);
            forms.push_back(linear_form(row));
        }
        for (const auto& [e, c] : terms_) {
            PolyQ t = constant(nvars_, c);
            for (size_t j = 0; j < nvars_; ++j)
                for (long long i = 0; i < e[j]; ++i) t = t * forms[j];
            out += t;
        }
        return out;
    }

    /// Exact division by the linear form `chi` (integer covector); nullopt if not divisible.
    std::optional<PolyQ> divide_by_linear(const IVec& chi) const {
        size_t piv = chi.size();
        for (size_t i = 0; i < chi.size(); ++i)
            if (chi[i] != 0) piv = i;
        check(piv < chi.size(), errc::schema_error, "division by zero form");
        Rat c(chi[piv]);
        PolyQ rem = *this;
        PolyQ quot(nvars_);
        PolyQ form = linear_form(chi);
        while (true) {
            // peel the leading x_piv part
            long long dmax = rem.degree_in(piv);
            if (dmax == 0) break;
            PolyQ lead(nvars_);
            for (const auto& [e, cf] : rem.terms_) {
                if (e[piv] != dmax) continue;
                IVec e2 = e;
                e2[piv] -= 1;
                lead.add_term(e2, cf / c);
            }
            quot += lead;
            rem = rem - lead * form;
        }
        if (!rem.is_zero()) return std::nullopt;
        return quot;
    }

  private:
    static bool is_zero_vec(const IVec& e) {
        for (long long x : e)
            if (x != 0) return false;
        return true;
    }
    static PolyQ monomial(size_t nvars, const IVec& e) {
        PolyQ p(nvars);
        p.terms_[e] = 1;
        return p;
    }

    size_t nvars_ = 0;
    std::map<IVec, Rat> terms_;
};

inline PolyQ operator*(const Rat& c, const PolyQ& p) { return p * c; }

}  // namespace alcove
