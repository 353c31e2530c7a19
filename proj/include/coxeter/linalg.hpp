#pragma once

// Small dense exact linear algebra over Rat: just enough for Gram matrices,
// simplex vertices, lattice kernels and determinant volumes at rank <= 9.

#include <optional>
#include <vector>

#include "coxeter/rational.hpp"

namespace coxeter {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline Rat dot(const Vec& a, const Vec& b) {
    Rat s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Vec& a, const Rat& c) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

inline Vec neg(const Vec& a) { return scale(a, Rat(-1)); }

inline bool is_zero_vec(const Vec& a) {
    for (const Rat& x : a)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec zero_vec(size_t n) { return Vec(n); }

inline Vec matvec(const Mat& m, const Vec& v) {
    Vec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline Mat matmul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat r(n, Vec(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            Rat s;
            for (size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
            r[i][j] = s;
        }
    return r;
}

// Gram matrix of a list of vectors.
inline Mat gram(const std::vector<Vec>& vs) {
    Mat g(vs.size(), Vec(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i; j < vs.size(); ++j)
            g[i][j] = g[j][i] = dot(vs[i], vs[j]);
    return g;
}

// Determinant by Gaussian elimination (exact).
inline Rat det(Mat m) {
    size_t n = m.size();
    Rat d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Rat inv = m[c][c].reciprocal();
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Rat f = m[r][c] * inv;
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

// Row echelon reduction in place; returns rank. Column order preserved.
inline size_t row_reduce(Mat& m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        Rat inv = m[rank][c].reciprocal();
        for (size_t k = c; k < cols; ++k) m[rank][k] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            Rat f = m[r][c];
            for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline size_t rank_of(Mat m) { return row_reduce(m); }

// Solves the square system A x = b; nullopt when A is singular.
inline std::optional<Vec> solve_square(Mat a, Vec b) {
    size_t n = a.size();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        Rat inv = a[c][c].reciprocal();
        for (size_t k = c; k < n; ++k) a[c][k] *= inv;
        b[c] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Rat f = a[r][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    return b;
}

// Coordinates of v in the given (independent) basis, if v lies in its span.
inline std::optional<Vec> coords_in_basis(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return is_zero_vec(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    // Solve (B^T B) x = B^T v, then verify B x = v.
    Mat g = gram(basis);
    Vec rhs(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) rhs[i] = dot(basis[i], v);
    auto x = solve_square(g, rhs);
    if (!x) return std::nullopt;
    Vec rec = zero_vec(v.size());
    for (size_t i = 0; i < basis.size(); ++i) rec = add(rec, scale(basis[i], (*x)[i]));
    if (rec != v) return std::nullopt;
    return x;
}

// Basis of the nullspace of m (as row vectors of length cols).
inline std::vector<Vec> kernel_basis(Mat m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    row_reduce(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (size_t r = 0; r < rows; ++r) {
        size_t c = 0;
        while (c < cols && m[r][c].is_zero()) ++c;
        if (c < cols) {
            pivot_col.push_back(static_cast<int>(c));
            is_pivot[c] = true;
        }
    }
    std::vector<Vec> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v(cols);
        v[free_c] = Rat(1);
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -m[r][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Exact integer square root; nullopt when v is not a perfect square.
inline std::optional<long long> isqrt_exact(long long v) {
    if (v < 0) return std::nullopt;
    long long r = 0;
    long long lo = 0, hi = 3037000499LL; // floor(sqrt(2^63 - 1))
    while (lo <= hi) {
        long long mid = lo + (hi - lo) / 2;
        if (mid * mid <= v) {
            r = mid;
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return r * r == v ? std::optional<long long>(r) : std::nullopt;
}

// Exact rational square root; nullopt when v is not a perfect square.
inline std::optional<Rat> sqrt_exact(const Rat& v) {
    auto n = isqrt_exact(v.num());
    auto d = isqrt_exact(v.den());
    if (!n || !d) return std::nullopt;
    return Rat(*n, *d);
}

} // namespace coxeter
