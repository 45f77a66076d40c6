// PG(k-1,q) primitives: normalized points and dual forms, ordered determinants,
// hyperplane pencils, projections, conics through five points, and the lift of
// PGL(2) projectivities to the space of a normal rational curve.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arclab/gf.hpp"
#include "arclab/linalg.hpp"

namespace arclab {

inline bool is_zero_vec(const Vec& v) {
    for (Elem x : v)
        if (x) return false;
    return true;
}

// Canonical representative: first nonzero coordinate scaled to 1.
inline Vec normalized(const Field& F, Vec v) {
    for (Elem x : v) {
        if (x == 0) continue;
        if (x != 1) {
            const Elem iv = F.inv(x);
            for (auto& y : v) y = F.mul(iv, y);
        }
        return v;
    }
    throw std::invalid_argument("normalized: zero vector is not a projective point");
}

inline bool proj_equal(const Field& F, const Vec& a, const Vec& b) {
    return normalized(F, a) == normalized(F, b);
}

struct ProjPoint {
    Vec coords;  // normalized
    ProjPoint() = default;
    ProjPoint(const Field& F, Vec v) : coords(normalized(F, std::move(v))) {}
    bool operator==(const ProjPoint& o) const { return coords == o.coords; }
    bool operator<(const ProjPoint& o) const { return coords < o.coords; }
};

struct LinearForm {
    Vec coeffs;  // normalized dual coordinates
    LinearForm() = default;
    LinearForm(const Field& F, Vec v) : coeffs(normalized(F, std::move(v))) {}
    bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }
    bool operator<(const LinearForm& o) const { return coeffs < o.coeffs; }
};

inline Elem eval_form(const Field& F, const LinearForm& f, const Vec& pt) {
    return dot(F, f.coeffs, pt);
}

// Determinant of the matrix whose first row is u followed by the rows of C in
// their stored order. The sign carries meaning; callers must not normalize it away.
inline Elem det_ordered(const Field& F, const Vec& u, const std::vector<Vec>& C) {
    Mat m;
    m.reserve(C.size() + 1);
    m.push_back(u);
    for (const auto& r : C) m.push_back(r);
    for (const auto& r : m)
        if (r.size() != m.size()) throw std::invalid_argument("det_ordered: length mismatch");
    return det(F, std::move(m));
}

// The q+1 hyperplanes through the span of k-2 independent points, ordered by
// increasing canonical dual coordinates.
inline std::vector<LinearForm> hyperplanes_through(const Field& F, const std::vector<Vec>& S) {
    if (S.empty()) throw std::invalid_argument("hyperplanes_through: empty span");
    const std::size_t k = S[0].size();
    if (S.size() != k - 2) throw std::invalid_argument("hyperplanes_through: need k-2 points");
    Mat m(S.begin(), S.end());
    Mat basis = nullspace(F, m);
    if (basis.size() != 2) throw std::invalid_argument("hyperplanes_through: points are dependent");
    std::vector<LinearForm> pencil;
    pencil.reserve(F.q() + 1);
    // projective combinations lambda*b0 + mu*b1: (1,0) and (mu ranges, lambda=1) style
    pencil.emplace_back(F, basis[0]);
    for (Elem mu = 0; mu < F.q(); ++mu) {
        Vec v(k);
        for (std::size_t j = 0; j < k; ++j) v[j] = F.add(F.mul(mu, basis[0][j]), basis[1][j]);
        pencil.emplace_back(F, std::move(v));
    }
    std::sort(pencil.begin(), pencil.end());
    pencil.erase(std::unique(pencil.begin(), pencil.end()), pencil.end());
    if (pencil.size() != F.q() + 1) throw std::logic_error("hyperplanes_through: pencil size");
    return pencil;
}

// Intersection of the line xa with the hyperplane ker(pi); requires pi(x) != 0.
inline Vec project_point(const Field& F, const Vec& a, const Vec& x, const LinearForm& pi) {
    const Elem px = eval_form(F, pi, x);
    if (px == 0) throw std::invalid_argument("project: center lies on the hyperplane");
    const Elem pa = eval_form(F, pi, a);
    Vec out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        out[j] = F.sub(F.mul(pa, x[j]), F.mul(px, a[j]));
    if (is_zero_vec(out)) throw std::invalid_argument("project: point equals the center");
    return out;
}

inline std::vector<Vec> project(const Field& F, const std::vector<Vec>& pts, const Vec& x,
                                const LinearForm& pi) {
    std::vector<Vec> out;
    out.reserve(pts.size());
    for (const auto& a : pts) out.push_back(project_point(F, a, x, pi));
    return out;
}

// Ternary quadratic form, coefficients against the monomial order
// X1^2, X1X2, X1X3, X2^2, X2X3, X3^2; canonically normalized.
struct Conic {
    std::array<Elem, 6> coeffs{};
};

inline Elem conic_eval(const Field& F, const Conic& c, const Vec& p) {
    const Elem m[6] = {F.mul(p[0], p[0]), F.mul(p[0], p[1]), F.mul(p[0], p[2]),
                       F.mul(p[1], p[1]), F.mul(p[1], p[2]), F.mul(p[2], p[2])};
    Elem s = 0;
    for (int i = 0; i < 6; ++i) s = F.add(s, F.mul(c.coeffs[i], m[i]));
    return s;
}

// The unique conic through five points of a planar arc.
inline Conic conic_through(const Field& F, const std::vector<Vec>& five) {
    if (five.size() != 5) throw std::invalid_argument("conic_through: need five points");
    Mat m;
    for (const auto& p : five) {
        if (p.size() != 3) throw std::invalid_argument("conic_through: points must be planar");
        m.push_back({F.mul(p[0], p[0]), F.mul(p[0], p[1]), F.mul(p[0], p[2]),
                     F.mul(p[1], p[1]), F.mul(p[1], p[2]), F.mul(p[2], p[2])});
    }
    // collinear triples make the fitted form degenerate (a product of lines),
    // and the nullspace dimension alone does not always flag them
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b)
            for (std::size_t c = b + 1; c < 5; ++c)
                if (det(F, Mat{five[a], five[b], five[c]}) == 0)
                    throw std::invalid_argument("conic_through: three input points are collinear");
    Mat ns = nullspace(F, std::move(m));
    if (ns.size() != 1)
        throw std::invalid_argument("conic_through: points are not an arc of size 5");
    Vec v = normalized(F, ns[0]);
    Conic c;
    std::copy(v.begin(), v.end(), c.coeffs.begin());
    return c;
}

// nu_{k-1}: (x1,x2) -> (x1^{k-1}, x1^{k-2} x2, ..., x2^{k-1}).
inline Vec nu_map(const Field& F, Elem x1, Elem x2, std::uint32_t k) {
    Vec out(k);
    for (std::uint32_t j = 0; j < k; ++j)
        out[j] = F.mul(F.pow(x1, k - 1 - j), F.pow(x2, j));
    return out;
}

// Lift a 2x2 projectivity (acting on row vectors, x -> x*alpha) to the k x k
// matrix acting on degree-(k-1) binary forms: nu(x*alpha) = nu(x) * lift.
inline Mat lift_projectivity(const Field& F, const Mat& alpha, std::uint32_t k) {
    if (alpha.size() != 2 || alpha[0].size() != 2 || alpha[1].size() != 2)
        throw std::invalid_argument("lift_projectivity: alpha must be 2x2");
    if (det(F, alpha) == 0) throw std::invalid_argument("lift_projectivity: singular alpha");
    // y1 = a*x1 + c*x2, y2 = b*x1 + d*x2 as binary forms (coeff index = power of x2)
    const Vec y1 = {alpha[0][0], alpha[1][0]};
    const Vec y2 = {alpha[0][1], alpha[1][1]};
    auto mul_forms = [&](const Vec& f, const Vec& g) {
        Vec out(f.size() + g.size() - 1, 0);
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                out[i + j] = F.add(out[i + j], F.mul(f[i], g[j]));
        return out;
    };
    Mat lift(k, Vec(k, 0));
    for (std::uint32_t j = 0; j < k; ++j) {
        Vec col = {1};
        for (std::uint32_t i = 0; i < k - 1 - j; ++i) col = mul_forms(col, y1);
        for (std::uint32_t i = 0; i < j; ++i) col = mul_forms(col, y2);
        for (std::uint32_t i = 0; i < k; ++i) lift[i][j] = col[i];
    }
    return lift;
}

// ---- canonical enumeration of the points of PG(k-1,q) ----

inline std::uint64_t point_count(std::uint32_t k, std::uint64_t q) {
    std::uint64_t n = 0, pw = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        n += pw;
        pw *= q;
    }
    return n;
}

// Index of a normalized point under lexicographic coordinate order.
inline std::uint64_t point_index(const Field& F, const Vec& pt) {
    const std::uint32_t k = static_cast<std::uint32_t>(pt.size());
    std::uint32_t lead = 0;
    while (lead < k && pt[lead] == 0) ++lead;
    if (lead == k || pt[lead] != 1) throw std::invalid_argument("point_index: not normalized");
    std::uint64_t suffix = 0;
    for (std::uint32_t j = lead + 1; j < k; ++j) suffix = suffix * F.q() + pt[j];
    return point_count(k - 1 - lead, F.q()) + suffix;
}

inline Vec point_at(const Field& F, std::uint32_t k, std::uint64_t idx) {
    // blocks by leading position from k-1 downward; block for lead l has q^{k-1-l} points
    std::uint64_t pw = 1;
    for (std::uint32_t l = k; l-- > 0;) {
        if (idx < pw) {
            Vec v(k, 0);
            v[l] = 1;
            std::uint64_t s = idx;
            for (std::uint32_t j = k; j-- > l + 1;) {
                v[j] = static_cast<Elem>(s % F.q());
                s /= F.q();
            }
            return v;
        }
        idx -= pw;
        pw *= F.q();
    }
    throw std::out_of_range("point_at: index out of range");
}

// All normalized points of the projective span of the given vectors.
inline std::vector<Vec> flat_points(const Field& F, const std::vector<Vec>& basis) {
    Mat b = rref(F, Mat(basis.begin(), basis.end()));
    const std::size_t d = b.size();
    if (d == 0) return {};
    std::vector<Vec> out;
    out.reserve(point_count(static_cast<std::uint32_t>(d), F.q()));
    const std::size_t k = b[0].size();
    for (std::uint64_t i = 0, n = point_count(static_cast<std::uint32_t>(d), F.q()); i < n; ++i) {
        Vec lambda = point_at(F, static_cast<std::uint32_t>(d), i);
        Vec v(k, 0);
        for (std::size_t r = 0; r < d; ++r) {
            if (lambda[r] == 0) continue;
            for (std::size_t c = 0; c < k; ++c) v[c] = F.add(v[c], F.mul(lambda[r], b[r][c]));
        }
        out.push_back(normalized(F, std::move(v)));
    }
    return out;
}

// Coordinates of pt with respect to the rows of `basis` (pt must lie in the span).
inline Vec coords_in_span(const Field& F, const Mat& basis, const Vec& pt) {
    return solve_left(F, basis, pt);
}

}  // namespace arclab
