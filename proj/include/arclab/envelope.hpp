// The Segre-Blokhuis-Bruen-Thas envelope: the degree-mt dual form phi(Z) built
// from the scaled tangent system, its linear factors, arc completion through
// them, spaces of vanishing forms, and the planar tensor verification.
//
// Duality convention: det_j deletes the j-th column and carries no sign. The
// dual point of the hyperplane spanned by rows y_1..y_{k-1} is the vector of
// those minors; it differs from the hyperplane's coefficient vector by the
// alternating twist w_j -> (-1)^{j+1} w_j.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arclab/arc.hpp"
#include "arclab/combinat.hpp"
#include "arclab/hompoly.hpp"
#include "arclab/tangent.hpp"

namespace arclab {

// (-1)^{j+1} x_j componentwise (an involution; the identity in characteristic 2).
inline Vec alternating_twist(const Field& F, Vec v) {
    for (std::size_t j = 1; j < v.size(); j += 2) v[j] = F.neg(v[j]);
    return v;
}

// det(X_1,...,X_{k-1}, u) expanded along the last row: a linear form in the
// substituted variables Z_j = det_j(X_1,...,X_{k-1}).
inline HomPoly last_row_cofactor_form(const Field& F, const Vec& u) {
    const std::uint32_t k = static_cast<std::uint32_t>(u.size());
    Vec co(k);
    for (std::uint32_t j = 1; j <= k; ++j) {
        Elem c = u[j - 1];
        if ((k + j) % 2 == 1) c = F.neg(c);
        co[j - 1] = c;
    }
    return HomPoly::linear(F, co);
}

// Substitute Z_j = det_j(X_1,...,X_{k-1}) into phi; the result lives in the
// (k-1)*k variables X_{ij}, row-major.
inline HomPoly detj_substitute(const Field& F, const HomPoly& phi) {
    const std::uint32_t k = phi.nvars();
    const std::uint32_t nv = (k - 1) * k;
    // minors as polynomials in the X grid
    std::vector<HomPoly> minors;
    std::vector<std::size_t> rows(k - 1);
    for (std::uint32_t j = 0; j < k; ++j) {
        // det of the (k-1)x(k-1) matrix skipping column j, via permutation expansion
        std::vector<std::uint32_t> cols;
        for (std::uint32_t c = 0; c < k; ++c)
            if (c != j) cols.push_back(c);
        HomPoly m(nv, k - 1);
        std::vector<std::uint32_t> perm(cols.begin(), cols.end());
        std::sort(perm.begin(), perm.end());
        do {
            std::size_t inv = 0;
            for (std::size_t a = 0; a < perm.size(); ++a)
                for (std::size_t b = a + 1; b < perm.size(); ++b)
                    if (perm[a] > perm[b]) ++inv;
            Exponents e(nv, 0);
            for (std::uint32_t r = 0; r < k - 1; ++r) e[r * k + perm[r]] += 1;
            Elem c = (inv & 1u) ? F.neg(1) : 1;
            // sign of the permutation relative to the ascending column list
            std::size_t base = 0;
            (void)base;
            m = m.add(F, HomPoly::monomial(nv, std::move(e), c));
        } while (std::next_permutation(perm.begin(), perm.end()));
        minors.push_back(std::move(m));
    }
    HomPoly out(nv, phi.degree() * (k - 1));
    for (const auto& [e, c] : phi.terms()) {
        HomPoly term = HomPoly::constant(F, nv, c);
        for (std::uint32_t j = 0; j < k; ++j)
            for (std::uint8_t rep = 0; rep < e[j]; ++rep) term = term.mul(F, minors[j]);
        out = out.add(F, term);
    }
    return out;
}

struct EnvelopeResult {
    HomPoly phi;        // degree m*t form in the dual variables Z_1..Z_k, normalized
    Elem phi_scale;     // scalar relating the normalized phi to the raw interpolation sum
    std::uint32_t m;    // 1 for q even, 2 for q odd
    std::int64_t t;
    TangentSystem system;  // the scaled system the construction used
};

// The unsigned-minor vector dual to the hyperplane spanned by the given rows.
inline Vec dual_point_of_span(const Field& F, const std::vector<Vec>& rows) {
    const std::uint32_t k = static_cast<std::uint32_t>(rows[0].size());
    if (rows.size() != k - 1u) throw std::invalid_argument("dual_point_of_span: need k-1 rows");
    Vec z(k);
    for (std::uint32_t j = 0; j < k; ++j) {
        Mat sub(k - 1, Vec(k - 1));
        for (std::uint32_t r = 0; r < k - 1; ++r) {
            std::uint32_t cc = 0;
            for (std::uint32_t c = 0; c < k; ++c) {
                if (c == j) continue;
                sub[r][cc++] = rows[r][c];
            }
        }
        z[j] = det(F, sub);
    }
    if (is_zero_vec(z)) throw std::invalid_argument("dual_point_of_span: dependent rows");
    return z;
}

// Duals of all hyperplanes meeting the arc in exactly k-2 points, normalized
// and deduplicated (sorted canonically).
inline std::vector<Vec> tangent_dual_points(const Arc& A) {
    const Field& F = A.F();
    std::vector<Vec> out;
    for_each_combination(A.size(), A.k - 2u, [&](const IndexTuple& S) {
        for (const auto& form : tangent_forms(A, S))
            out.push_back(normalized(F, alternating_twist(F, form.coeffs)));
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Dimension of the space of degree-d forms vanishing on every given point.
inline std::size_t vanishing_space_dimension(const Field& F, const std::vector<Vec>& pts,
                                             std::uint32_t nvars, std::uint32_t d) {
    const auto monos = monomials_of_degree(nvars, d);
    Mat m;
    for (const auto& p : pts) {
        Vec row(monos.size());
        for (std::size_t c = 0; c < monos.size(); ++c) {
            Elem v = 1;
            for (std::uint32_t i = 0; i < nvars; ++i)
                if (monos[c][i]) v = F.mul(v, F.pow(p[i], monos[c][i]));
            row[c] = v;
        }
        m.push_back(std::move(row));
    }
    return nullspace(F, std::move(m)).size();
}

// Build phi(Z) by determinant interpolation over the first mt+k-1 arc points:
// each summand is a
// g-power times a product of last-row cofactor forms, which are linear in Z.
inline EnvelopeResult sbbt_envelope(const Arc& A) {
    const Field& F = A.F();
    const std::uint32_t k = A.k;
    const std::uint32_t m = (F.q() % 2 == 0) ? 1 : 2;
    const std::int64_t t = A.t();
    if (t < 1) throw std::invalid_argument("sbbt_envelope: t must be >= 1");
    if (A.size() < m * static_cast<std::uint64_t>(t) + k - 1)
        throw std::invalid_argument("sbbt_envelope: requires |A| >= mt+k-1");
    TangentSystem sys = TangentSystem::build_scaled(A);
    const std::size_t esize = static_cast<std::size_t>(m) * t + k - 1;
    HomPoly phi(k, m * static_cast<std::uint32_t>(t));
    for_each_combination(esize, k - 1u, [&](const IndexTuple& T) {
        Elem coef = F.pow(sys.g_value(T), m);
        HomPoly term = HomPoly::constant(F, k, coef);
        Elem denom = 1;
        for (std::size_t u = 0; u < esize; ++u) {
            if (std::find(T.begin(), T.end(), u) != T.end()) continue;
            std::vector<Vec> rows;
            for (auto i : T) rows.push_back(A.points[i]);
            rows.push_back(A.points[u]);
            denom = F.mul(denom, det(F, Mat(rows.begin(), rows.end())));
            term = term.mul(F, last_row_cofactor_form(F, A.points[u]));
        }
        term = term.scale(F, F.inv(denom));
        phi = phi.add(F, term);
    });
    if (phi.is_zero()) throw std::logic_error("sbbt_envelope: vanishing form");
    // internal identity G(x, S) = f_S(x)^m for every (k-2)-subset S and x in A
    for_each_combination(A.size(), k - 2u, [&](const IndexTuple& S) {
        for (std::size_t x = 0; x < A.size(); ++x) {
            std::vector<Vec> rows{A.points[x]};
            for (auto i : S) rows.push_back(A.points[i]);
            Vec z;
            bool dependent = false;
            try {
                z = dual_point_of_span(F, rows);
            } catch (const std::invalid_argument&) {
                dependent = true;  // x in S: all minors vanish
            }
            const Elem lhs = dependent ? 0 : phi.eval(F, z);
            const bool in_S = std::find(S.begin(), S.end(), x) != S.end();
            const Elem rhs = in_S ? 0 : F.pow(sys.f_eval_point(IndexTuple(S), x), m);
            if (lhs != rhs)
                throw std::logic_error("sbbt_envelope: internal identity failed (scaling bug)");
        }
    });
    const Elem lead = phi.terms().begin()->second;
    return EnvelopeResult{phi.normalized(F), lead, m, t, std::move(sys)};
}

// All projective linear factors of phi with multiplicities.
inline std::vector<std::pair<LinearForm, std::uint32_t>> linear_factors(const Field& F,
                                                                        const HomPoly& phi) {
    const std::uint32_t k = phi.nvars();
    if (!(k <= 4 || F.q() <= 16))
        throw std::invalid_argument("linear_factors: candidate space guard exceeded");
    std::vector<std::pair<LinearForm, std::uint32_t>> out;
    if (phi.is_zero()) return out;
    for (std::uint64_t i = 0, n = point_count(k, F.q()); i < n; ++i) {
        const Vec cand = point_at(F, k, i);
        HomPoly ell = HomPoly::linear(F, cand);
        std::uint32_t mult = 0;
        HomPoly cur = phi;
        while (true) {
            auto quo = cur.divide_exact(F, ell);
            if (!quo) break;
            ++mult;
            cur = std::move(*quo);
        }
        if (mult) out.emplace_back(LinearForm(F, cand), mult);
    }
    return out;
}

// Complete an arc by appending the points whose dual forms divide phi with
// multiplicity at least m; each candidate is re-verified with is_arc.
inline Arc complete_via_envelope(const Arc& A) {
    const Field& F = A.F();
    EnvelopeResult env = sbbt_envelope(A);
    std::vector<Vec> pts = A.points;
    for (const auto& [ell, mult] : linear_factors(F, env.phi)) {
        if (mult < env.m) continue;
        const Vec cand = normalized(F, alternating_twist(F, ell.coeffs));
        bool already = false;
        for (const auto& p : pts)
            if (proj_equal(F, p, cand)) already = true;
        if (already) continue;
        std::vector<Vec> trial = pts;
        trial.push_back(cand);
        if (is_arc(F, trial, A.k).ok) pts = std::move(trial);
    }
    return make_arc(A.field, A.k, std::move(pts));
}

struct VanishingForms {
    std::vector<HomPoly> basis;       // degree-r ternary forms vanishing on the set
    std::vector<std::size_t> socle;   // point indices forming a column basis of M_r
};

// Nullspace of the degree-r evaluation matrix on a planar point set, plus an
// r-socle (points indexing a column basis of the evaluation matrix).
inline VanishingForms vanishing_forms(const Field& F, const std::vector<Vec>& pts,
                                      std::uint32_t r) {
    for (const auto& p : pts)
        if (p.size() != 3) throw std::invalid_argument("vanishing_forms: planar points only");
    const auto monos = monomials_of_degree(3, r);
    Mat eval(pts.size(), Vec(monos.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t c = 0; c < monos.size(); ++c) {
            Elem v = 1;
            for (int var = 0; var < 3; ++var)
                if (monos[c][var]) v = F.mul(v, F.pow(pts[i][var], monos[c][var]));
            eval[i][c] = v;
        }
    VanishingForms out;
    for (const auto& nv : nullspace(F, eval)) {
        HomPoly f(3, r);
        for (std::size_t c = 0; c < monos.size(); ++c)
            if (nv[c]) f.set_term(monos[c], nv[c]);
        out.basis.push_back(f.normalized(F));
    }
    // socle: pivot columns of M_r = eval^T, i.e. pivot rows of eval
    Mat tr(monos.size(), Vec(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t c = 0; c < monos.size(); ++c) tr[c][i] = eval[i][c];
    std::vector<std::size_t> piv;
    rref_in_place(F, tr, &piv);
    out.socle = piv;
    return out;
}

namespace detail {

// Coefficient vector of a ternary form against the degree-d monomial list.
inline Vec form_coeffs(const Field&, const HomPoly& f, const std::vector<Exponents>& monos) {
    Vec v(monos.size(), 0);
    for (const auto& [e, c] : f.terms()) {
        auto it = std::lower_bound(monos.begin(), monos.end(), e);
        if (it == monos.end() || *it != e) throw std::logic_error("form_coeffs: stray monomial");
        v[static_cast<std::size_t>(it - monos.begin())] = c;
    }
    return v;
}

// Does f lie in the span of the rows of `basis` (coefficients over monos)?
inline bool in_span(const Field& F, const Mat& basis, const Vec& v) {
    Mat m = basis;
    const std::size_t r0 = rank(F, m);
    m.push_back(v);
    return rank(F, m) == r0;
}

}  // namespace detail

// Expanded product of the tangent forms at a single arc point (k = 3), as a
// degree-t ternary form including the system's scale.
inline HomPoly tangent_product_form(const TangentSystem& sys, std::size_t a) {
    const Arc& A = sys.arc();
    const Field& F = A.F();
    if (A.k != 3) throw std::invalid_argument("tangent_product_form: planar arcs only");
    HomPoly f = HomPoly::constant(F, 3, 1);
    for (const auto& form : tangent_forms(A, {a})) f = f.mul(F, HomPoly::linear(F, form.coeffs));
    // match the system's scaling of f_{a}
    const Vec probe = A.points[(a + 1) % A.size()];
    const Elem want = sys.f_eval_point({a}, (a + 1) % A.size());
    const Elem have = f.eval(F, probe);
    return f.scale(F, F.div(want, have));
}

// Check a bidegree-(t,t) form F6 in the six variables (X1,X2,X3,Y1,Y2,Y3):
//  (i) for every a in A, F6(X, a) is a nonzero multiple of f_a(X) mod Psi;
// (ii) F6 is symmetric (t odd) or alternating (t even) mod (Psi[X], Psi[Y]).
inline bool verify_planar_tensor(const Arc& A, const HomPoly& F6) {
    const Field& F = A.F();
    if (A.k != 3) throw std::invalid_argument("verify_planar_tensor: planar arcs only");
    const std::int64_t t = A.t();
    if (F6.nvars() != 6 || F6.degree() != 2 * t)
        throw std::invalid_argument("verify_planar_tensor: wrong variable count or degree");
    for (const auto& [e, c] : F6.terms()) {
        const int dx = e[0] + e[1] + e[2], dy = e[3] + e[4] + e[5];
        if (dx != t || dy != t)
            throw std::invalid_argument("verify_planar_tensor: not bidegree (t,t)");
    }
    TangentSystem sys = TangentSystem::build_scaled(A);
    const auto monos = monomials_of_degree(3, static_cast<std::uint32_t>(t));
    const auto psi = vanishing_forms(F, A.points, static_cast<std::uint32_t>(t));
    Mat psi_rows;
    for (const auto& f : psi.basis) psi_rows.push_back(detail::form_coeffs(F, f, monos));

    auto substitute_y = [&](const Vec& a) {
        HomPoly g(3, static_cast<std::uint32_t>(t));
        for (const auto& [e, c] : F6.terms()) {
            Elem v = c;
            for (int i = 0; i < 3; ++i)
                if (e[3 + i]) v = F.mul(v, F.pow(a[i], e[3 + i]));
            if (!v) continue;
            Exponents ex(3);
            for (int i = 0; i < 3; ++i) ex[i] = e[i];
            auto cur = g.terms().count(ex) ? g.terms().at(ex) : 0;
            g.set_term(ex, F.add(cur, v));
        }
        return g;
    };

    // (i) proportionality at every arc point
    for (std::size_t a = 0; a < A.size(); ++a) {
        const HomPoly fa = tangent_product_form(sys, a);
        const HomPoly fxa = substitute_y(A.points[a]);
        const Vec va = detail::form_coeffs(F, fxa, monos);
        if (detail::in_span(F, psi_rows, va)) return false;  // zero multiple
        Mat with_fa = psi_rows;
        with_fa.push_back(detail::form_coeffs(F, fa, monos));
        if (!detail::in_span(F, with_fa, va)) return false;
    }

    // (ii) symmetry / alternation modulo (Psi[X], Psi[Y])
    const auto monos6 = monomials_of_degree(6, static_cast<std::uint32_t>(2 * t));
    std::vector<Exponents> bimonos;
    for (const auto& e : monos6) {
        const int dx = e[0] + e[1] + e[2];
        if (dx == t && e[3] + e[4] + e[5] == t) bimonos.push_back(e);
    }
    auto coeffs6 = [&](const HomPoly& f) {
        Vec v(bimonos.size(), 0);
        for (const auto& [e, c] : f.terms()) {
            auto it = std::lower_bound(bimonos.begin(), bimonos.end(), e);
            if (it == bimonos.end() || *it != e) throw std::logic_error("tensor: stray monomial");
            v[static_cast<std::size_t>(it - bimonos.begin())] = c;
        }
        return v;
    };
    HomPoly swapped(6, static_cast<std::uint32_t>(2 * t));
    for (const auto& [e, c] : F6.terms()) {
        Exponents se(6);
        for (int i = 0; i < 3; ++i) {
            se[i] = e[3 + i];
            se[3 + i] = e[i];
        }
        swapped.set_term(std::move(se), c);
    }
    const HomPoly diff =
        (t % 2 == 1) ? F6.sub(F, swapped) : F6.add(F, swapped);  // alternating: F + F^T = 0 shape
    // span of psi(X)*monomial(Y) and monomial(X)*psi(Y) inside the bidegree space
    Mat modspace;
    for (const auto& f : psi.basis) {
        for (const auto& my : monos) {
            HomPoly prod(6, static_cast<std::uint32_t>(2 * t));
            for (const auto& [e, c] : f.terms()) {
                Exponents e6(6);
                for (int i = 0; i < 3; ++i) {
                    e6[i] = e[i];
                    e6[3 + i] = my[i];
                }
                prod.set_term(std::move(e6), c);
            }
            modspace.push_back(coeffs6(prod));
            HomPoly prod2(6, static_cast<std::uint32_t>(2 * t));
            for (const auto& [e, c] : f.terms()) {
                Exponents e6(6);
                for (int i = 0; i < 3; ++i) {
                    e6[i] = my[i];
                    e6[3 + i] = e[i];
                }
                prod2.set_term(std::move(e6), c);
            }
            modspace.push_back(coeffs6(prod2));
        }
    }
    if (diff.is_zero()) return true;
    if (modspace.empty()) return false;
    return detail::in_span(F, modspace, coeffs6(diff));
}

}  // namespace arclab
