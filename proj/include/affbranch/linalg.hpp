#pragma once

#include "affbranch/rational.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace affbranch {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline Vec zero_vec(size_t n) { return Vec(n, Rat(0)); }

inline Vec operator+(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Vec& operator+=(Vec& a, const Vec& b) { return a = a + b; }
inline Vec& operator-=(Vec& a, const Vec& b) { return a = a - b; }

inline bool is_zero(const Vec& a) {
    for (auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

inline Rat dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Mat identity_mat(size_t n) {
    Mat m(n, zero_vec(n));
    for (size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
    return m;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
    assert(!m.empty() && m[0].size() == v.size());
    Vec r(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!m[i][j].is_zero() && !v[j].is_zero()) r[i] += m[i][j] * v[j];
    return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    assert(a[0].size() == k);
    Mat r(n, zero_vec(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l)
            if (!a[i][l].is_zero())
                for (size_t j = 0; j < m; ++j)
                    if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
    return r;
}

// Solve A x = b for square nonsingular A by fraction-exact Gaussian elimination.
inline Vec solve_linear(Mat a, Vec b) {
    size_t n = a.size();
    if (n == 0) return {};
    assert(a[0].size() == n && b.size() == n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::runtime_error("solve_linear: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rat inv = Rat(1) / a[col][col];
        for (size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rat f = a[r][col];
            for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

inline Mat mat_inverse(const Mat& a) {
    size_t n = a.size();
    Mat inv(n, zero_vec(n));
    for (size_t j = 0; j < n; ++j) {
        Vec e = zero_vec(n);
        e[j] = Rat(1);
        Vec x = solve_linear(a, e);
        for (size_t i = 0; i < n; ++i) inv[i][j] = x[i];
    }
    return inv;
}

// Lexicographic order on exact vectors; used for canonical sorting of roots
// and weights so that all enumeration output is deterministic.
inline bool vec_less(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const { return vec_less(a, b); }
};

} // namespace affbranch
