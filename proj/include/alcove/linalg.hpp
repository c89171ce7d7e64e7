#pragma once

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "alcove/errors.hpp"
#include "alcove/numeric.hpp"

namespace alcove {

using IVec = std::vector<long long>;
using RVec = std::vector<Rat>;

inline IVec ivec_zero(size_t n) { return IVec(n, 0); }

inline RVec operator+(const RVec& a, const RVec& b) {
    RVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec operator+(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec operator-(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec operator-(const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline IVec operator*(long long c, const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline long long dot(const IVec& a, const IVec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const IVec& a) {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

/// Dense integer matrix, row-major. Rows act on column vectors from the left.
struct IMat {
    size_t rows = 0, cols = 0;
    std::vector<long long> a;

    IMat() = default;
    IMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

    static IMat identity(size_t n) {
        IMat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    long long& operator()(size_t i, size_t j) { return a[i * cols + j]; }
    long long operator()(size_t i, size_t j) const { return a[i * cols + j]; }

    bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const IMat& o) const { return !(*this == o); }
    bool operator<(const IMat& o) const { return a < o.a; }

    IVec apply(const IVec& v) const {
        IVec r(rows, 0);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    RVec apply(const RVec& v) const {
        RVec r(rows, Rat(0));
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) r[i] += Rat((*this)(i, j)) * v[j];
        return r;
    }

    IMat operator*(const IMat& o) const {
        IMat r(rows, o.cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t k = 0; k < cols; ++k) {
                long long x = (*this)(i, k);
                if (x == 0) continue;
                for (size_t j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    IMat transpose() const {
        IMat r(cols, rows);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /// Applies the transpose to a vector: (M^T v)_j = sum_i M(i,j) v_i.
    IVec apply_transpose(const IVec& v) const {
        IVec r(cols, 0);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) r[j] += (*this)(i, j) * v[i];
        return r;
    }
};

inline long long det(const IMat& m) {
    assert(m.rows == m.cols);
    size_t n = m.rows;
    std::vector<Rat> a(n * n);
    for (size_t i = 0; i < n * n; ++i) a[i] = Rat(m.a[i]);
    Rat d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
            d = -d;
        }
        d *= a[c * n + c];
        for (size_t i = c + 1; i < n; ++i) {
            Rat f = a[i * n + c] / a[c * n + c];
            for (size_t j = c; j < n; ++j) a[i * n + j] -= f * a[c * n + j];
        }
    }
    Rat num = d;
    assert(rat_den(num) == 1);
    Int v = rat_num(num);
    return static_cast<long long>(v);
}

/// Inverse of an integer matrix with determinant +-1.
inline IMat inverse_unimodular(const IMat& m) {
    assert(m.rows == m.cols);
    size_t n = m.rows;
    std::vector<Rat> a(n * 2 * n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i * 2 * n + j] = Rat(m(i, j));
        a[i * 2 * n + n + i] = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv * 2 * n + c] == 0) ++piv;
        check(piv < n, errc::singular_solve, "matrix not invertible");
        if (piv != c)
            for (size_t j = 0; j < 2 * n; ++j) std::swap(a[piv * 2 * n + j], a[c * 2 * n + j]);
        Rat d = a[c * 2 * n + c];
        for (size_t j = 0; j < 2 * n; ++j) a[c * 2 * n + j] /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            Rat f = a[i * 2 * n + c];
            if (f == 0) continue;
            for (size_t j = 0; j < 2 * n; ++j) a[i * 2 * n + j] -= f * a[c * 2 * n + j];
        }
    }
    IMat r(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat q = a[i * 2 * n + n + j];
            check(rat_den(q) == 1, errc::singular_solve, "inverse is not integral");
            r(i, j) = static_cast<long long>(rat_num(q));
        }
    return r;
}

/// Solves A x = b exactly over Q. Rows of `rows` form A. Returns nullopt if inconsistent;
/// free coordinates are set to zero.
inline std::optional<RVec> rat_solve(const std::vector<RVec>& rows, const RVec& b) {
    size_t m = rows.size();
    size_t n = m ? rows[0].size() : 0;
    std::vector<RVec> a(m, RVec(n + 1, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
        a[i][n] = b[i];
    }
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t piv = r;
        while (piv < m && a[piv][c] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[r]);
        Rat d = a[r][c];
        for (size_t j = c; j <= n; ++j) a[r][j] /= d;
        for (size_t i = 0; i < m; ++i) {
            if (i == r) continue;
            Rat f = a[i][c];
            if (f == 0) continue;
            for (size_t j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < m; ++i)
        if (a[i][n] != 0) return std::nullopt;
    RVec x(n, Rat(0));
    for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][n];
    return x;
}

namespace detail {

/// Row-style Hermite normal form (pivot entries positive, entries below pivots zero,
/// entries above reduced into [0, pivot)). Returns the nonzero rows.
inline std::vector<IVec> hnf_rows(std::vector<IVec> rows) {
    if (rows.empty()) return {};
    size_t n = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < n; ++c) {
        // Euclidean elimination in column c among rows r..end.
        while (true) {
            size_t nz = rows.size();
            for (size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (nz == rows.size() || std::abs(rows[i][c]) < std::abs(rows[nz][c]))) nz = i;
            if (nz == rows.size()) break;
            std::swap(rows[r], rows[nz]);
            bool clean = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                long long q = rows[i][c] / rows[r][c];
                rows[i] = rows[i] - q * rows[r];
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < rows.size() && rows[r][c] != 0) {
            if (rows[r][c] < 0) rows[r] = -1 * rows[r];
            for (size_t i = 0; i < r; ++i) {
                long long q = rows[i][c] / rows[r][c];
                if (rows[i][c] % rows[r][c] < 0) --q;
                if (q != 0) rows[i] = rows[i] - q * rows[r];
            }
            ++r;
        }
    }
    rows.resize(r);
    return rows;
}

/// Canonical representative of v modulo the lattice spanned by `hnf` (rows in HNF).
inline IVec reduce_mod_lattice(IVec v, const std::vector<IVec>& hnf) {
    for (const auto& row : hnf) {
        size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        if (c == row.size()) continue;
        long long q = v[c] / row[c];
        if (v[c] % row[c] < 0) --q;
        if (q != 0) v = v - q * row;
    }
    return v;
}

/// Membership of v in the lattice spanned by `hnf` rows.
inline bool in_lattice(const IVec& v, const std::vector<IVec>& hnf) {
    return is_zero(reduce_mod_lattice(v, hnf));
}

/// Solves A x = b over Z (A given by rows). Free directions minimized to a canonical
/// choice by reducing against the kernel lattice. Returns nullopt if no integer solution.
inline std::optional<IVec> int_solve(const std::vector<IVec>& rows, const IVec& b);

/// Integer kernel basis of the map x -> (dot(rows[i], x))_i.
inline std::vector<IVec> int_kernel(const std::vector<IVec>& rows, size_t n) {
    // Kernel via rational row reduction, then clear denominators; canonicalize by HNF.
    std::vector<RVec> a;
    for (const auto& r : rows) {
        RVec rr(n);
        for (size_t j = 0; j < n; ++j) rr[j] = Rat(r[j]);
        a.push_back(rr);
    }
    std::vector<size_t> pivots;
    size_t rk = 0;
    for (size_t c = 0; c < n && rk < a.size(); ++c) {
        size_t piv = rk;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rk]);
        Rat d = a[rk][c];
        for (size_t j = 0; j < n; ++j) a[rk][j] /= d;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == rk) continue;
            Rat f = a[i][c];
            if (f == 0) continue;
            for (size_t j = 0; j < n; ++j) a[i][j] -= f * a[rk][j];
        }
        pivots.push_back(c);
        ++rk;
    }
    std::vector<IVec> basis;
    for (size_t c = 0; c < n; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
        RVec v(n, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < rk; ++i) v[pivots[i]] = -a[i][c];
        Int lcm = 1;
        for (size_t j = 0; j < n; ++j) lcm = boost::multiprecision::lcm(lcm, rat_den(v[j]));
        IVec iv(n);
        for (size_t j = 0; j < n; ++j) {
            Int t = rat_num(v[j]) * (lcm / rat_den(v[j]));
            iv[j] = static_cast<long long>(t);
        }
        basis.push_back(iv);
    }
    return hnf_rows(basis);
}

inline std::optional<IVec> int_solve(const std::vector<IVec>& rows, const IVec& b) {
    // Smith-style diagonalization with unimodular row/col ops; col ops tracked in V.
    size_t m = rows.size();
    size_t n = m ? rows[0].size() : 0;
    std::vector<std::vector<long long>> A(m, std::vector<long long>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) A[i][j] = rows[i][j];
    std::vector<long long> rhs(b.begin(), b.end());
    IMat V = IMat::identity(n);  // x = V y
    size_t t = 0;
    while (t < m && t < n) {
        size_t pi = m, pj = n;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (A[i][j] != 0 && (pi == m || std::abs(A[i][j]) < std::abs(A[pi][pj]))) pi = i, pj = j;
        if (pi == m) break;
        std::swap(A[t], A[pi]);
        std::swap(rhs[t], rhs[pi]);
        if (pj != t) {
            for (size_t i = 0; i < m; ++i) std::swap(A[i][t], A[i][pj]);
            for (size_t i = 0; i < n; ++i) std::swap(V(i, t), V(i, pj));
        }
        bool dirty = false;
        for (size_t i = t + 1; i < m; ++i) {
            if (A[i][t] == 0) continue;
            long long q = A[i][t] / A[t][t];
            if (q != 0) {
                for (size_t j = 0; j < n; ++j) A[i][j] -= q * A[t][j];
                rhs[i] -= q * rhs[t];
            }
            if (A[i][t] != 0) dirty = true;
        }
        for (size_t j = t + 1; j < n; ++j) {
            if (A[t][j] == 0) continue;
            long long q = A[t][j] / A[t][t];
            if (q != 0) {
                for (size_t i = 0; i < m; ++i) A[i][j] -= q * A[i][t];
                for (size_t i = 0; i < n; ++i) V(i, j) -= q * V(i, t);
            }
            if (A[t][j] != 0) dirty = true;
        }
        if (dirty) continue;  // smaller remainders moved into the submatrix; redo pivot
        ++t;
    }
    IVec y(n, 0);
    for (size_t i = 0; i < m; ++i) {
        long long d = (i < n) ? A[i][i] : 0;
        if (d == 0) {
            if (rhs[i] != 0) return std::nullopt;
        } else {
            if (rhs[i] % d != 0) return std::nullopt;
            y[i] = rhs[i] / d;
        }
    }
    return V.apply(y);
}

}  // namespace detail

}  // namespace alcove
