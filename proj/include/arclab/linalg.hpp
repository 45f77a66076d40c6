// Dense exact linear algebra over GF(q): elimination, rank, nullspace, inverse.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "arclab/gf.hpp"

namespace arclab {

using Vec = std::vector<Elem>;
using Mat = std::vector<Vec>;

inline Mat identity_matrix(const Field&, std::size_t n) {
    Mat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Elem dot(const Field& F, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
    return s;
}

// Row vector times matrix.
inline Vec vec_mat(const Field& F, const Vec& v, const Mat& m) {
    if (m.empty()) return {};
    Vec out(m[0].size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = F.add(out[j], F.mul(v[i], m[i][j]));
    }
    return out;
}

inline Mat mat_mul(const Field& F, const Mat& a, const Mat& b) {
    Mat out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = vec_mat(F, a[i], b);
    return out;
}

inline Elem det(const Field& F, Mat m) {
    const std::size_t n = m.size();
    for (const auto& r : m)
        if (r.size() != n) throw std::invalid_argument("det: matrix not square");
    bool neg = false;
    Elem d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            neg = !neg;
        }
        d = F.mul(d, m[c][c]);
        const Elem ic = F.inv(m[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Elem f = F.mul(m[r][c], ic);
            for (std::size_t cc = c; cc < n; ++cc)
                m[r][cc] = F.sub(m[r][cc], F.mul(f, m[c][cc]));
        }
    }
    return neg ? F.neg(d) : d;
}

// Reduced row echelon form in place; returns rank, optionally the pivot columns.
inline std::size_t rref_in_place(const Field& F, Mat& m,
                                 std::vector<std::size_t>* pivots = nullptr) {
    if (pivots) pivots->clear();
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const Elem iv = F.inv(m[r][c]);
        for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] = F.mul(iv, m[r][cc]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Elem f = m[i][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                m[i][cc] = F.sub(m[i][cc], F.mul(f, m[r][cc]));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

inline std::size_t rank(const Field& F, Mat m) { return rref_in_place(F, m); }

// Basis of {v : M v = 0} (column nullspace), deterministic via RREF free columns.
inline Mat nullspace(const Field& F, Mat m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    std::vector<std::size_t> piv;
    rref_in_place(F, m, &piv);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    Mat basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_piv[fc]) continue;
        Vec v(cols, 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(m[i][fc]);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Mat rref(const Field& F, Mat m) {
    rref_in_place(F, m);
    while (!m.empty()) {
        bool zero = true;
        for (Elem x : m.back())
            if (x) {
                zero = false;
                break;
            }
        if (!zero) break;
        m.pop_back();
    }
    return m;
}

inline bool same_rowspace(const Field& F, const Mat& a, const Mat& b) {
    return rref(F, a) == rref(F, b);
}

// Solve x * m = target for a row vector x (m has full row rank); throws if inconsistent.
inline Vec solve_left(const Field& F, const Mat& m, const Vec& target) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("solve_left: empty system");
    const std::size_t w = m[0].size();
    // transpose-augment: columns of m^T are the unknown contributions
    Mat aug(w, Vec(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < w; ++j) aug[j][i] = m[i][j];
    for (std::size_t j = 0; j < w; ++j) aug[j][n] = target[j];
    std::vector<std::size_t> piv;
    rref_in_place(F, aug, &piv);
    Vec x(n, 0);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == n) throw std::invalid_argument("solve_left: inconsistent system");
        x[piv[i]] = aug[i][n];
    }
    // verify (guards underdetermined systems)
    if (vec_mat(F, x, m) != target) throw std::invalid_argument("solve_left: no solution");
    return x;
}

inline Mat mat_inv(const Field& F, const Mat& m) {
    const std::size_t n = m.size();
    Mat aug(n, Vec(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    if (rref_in_place(F, aug) != n) throw std::invalid_argument("mat_inv: singular matrix");
    Mat out(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

}  // namespace arclab
