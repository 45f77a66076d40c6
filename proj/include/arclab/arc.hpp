// Arcs of PG(k-1,q): verification, the named constructions (normal rational
// curves, the Table-1 hyperoval families, the Segre 3-space arcs, the Glynn
// arc, Kestenband arcs), code duality, and the extension sieve.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arclab/combinat.hpp"
#include "arclab/gf.hpp"
#include "arclab/geometry.hpp"
#include "arclab/linalg.hpp"

namespace arclab {

using FieldPtr = std::shared_ptr<const Field>;

struct Arc {
    FieldPtr field;
    std::uint32_t k = 0;
    std::vector<Vec> points;  // raw representatives, order is part of identity

    const Field& F() const { return *field; }
    std::size_t size() const { return points.size(); }

    // tangent deficiency t = q + k - 1 - |A|
    std::int64_t t() const {
        return static_cast<std::int64_t>(F().q()) + k - 1 - static_cast<std::int64_t>(size());
    }
};

struct ArcCheck {
    bool ok = true;
    std::vector<std::size_t> witness;  // a dependent k-subset when !ok
};

using Params = std::vector<std::pair<std::string, std::string>>;

namespace detail {

inline constexpr std::uint64_t sieve_guard = 1ull << 26;

inline ArcCheck is_arc_bruteforce(const Field& F, const std::vector<Vec>& pts, std::uint32_t k) {
    const std::size_t n = pts.size();
    if (n < k) return {};
    ArcCheck res;
    for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
        if (!res.ok) return;
        Mat m;
        m.reserve(k);
        for (auto i : idx) m.push_back(pts[i]);
        if (det(F, std::move(m)) == 0) res = {false, idx};
    });
    return res;
}

// Mark every point lying in the span of some (k-1)-subset that includes the
// freshly added index `last`.
inline void mark_spans_with(const Field& F, const std::vector<Vec>& pts, std::size_t last,
                            std::uint32_t k, std::vector<std::uint8_t>& marks) {
    if (last + 1 < static_cast<std::size_t>(k - 1)) return;
    for_each_combination(last, k - 2, [&](const std::vector<std::size_t>& S) {
        std::vector<Vec> span;
        span.reserve(k - 1);
        for (auto i : S) span.push_back(pts[i]);
        span.push_back(pts[last]);
        for (auto& sp : flat_points(F, span)) marks[point_index(F, sp)] = 1;
    });
}

inline ArcCheck is_arc_sieve(const Field& F, const std::vector<Vec>& pts, std::uint32_t k) {
    std::vector<std::uint8_t> marks(point_count(k, F.q()), 0);
    Mat basis;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i < static_cast<std::size_t>(k - 1)) {
            basis.push_back(pts[i]);
            if (rank(F, basis) != basis.size()) return is_arc_bruteforce(F, pts, k);
        } else {
            if (marks[point_index(F, normalized(F, pts[i]))])
                return is_arc_bruteforce(F, pts, k);  // slow path recovers a witness
        }
        mark_spans_with(F, pts, i, k, marks);
    }
    return {};
}

}  // namespace detail

// True iff every k-subset has rank k; on failure the witness names one that does not.
inline ArcCheck is_arc(const Field& F, const std::vector<Vec>& pts, std::uint32_t k) {
    if (k < 2) throw std::invalid_argument("is_arc: dimension must be >= 2");
    for (const auto& p : pts) {
        if (p.size() != k) throw std::invalid_argument("is_arc: coordinate length mismatch");
        if (is_zero_vec(p)) throw std::invalid_argument("is_arc: zero vector");
    }
    if (pts.size() <= static_cast<std::size_t>(k) + 4 ||
        point_count(k, F.q()) > detail::sieve_guard)
        return detail::is_arc_bruteforce(F, pts, k);
    return detail::is_arc_sieve(F, pts, k);
}

inline Arc make_arc(FieldPtr field, std::uint32_t k, std::vector<Vec> pts, bool validate = true) {
    Arc a{std::move(field), k, std::move(pts)};
    if (validate) {
        for (std::size_t i = 0; i < a.points.size(); ++i)
            for (std::size_t j = i + 1; j < a.points.size(); ++j)
                if (proj_equal(a.F(), a.points[i], a.points[j]))
                    throw std::invalid_argument("arc: repeated projective point");
        auto chk = is_arc(a.F(), a.points, k);
        if (!chk.ok) throw std::invalid_argument("arc: dependent k-subset");
    }
    return a;
}

// The normal rational curve {nu(1,t)} followed by nu(0,1), in field order.
inline Arc nrc(FieldPtr field, std::uint32_t k) {
    const Field& F = *field;
    if (F.q() < k - 1) throw std::invalid_argument("nrc: requires q >= k-1");
    std::vector<Vec> pts;
    pts.reserve(F.q() + 1);
    for (Elem t = 0; t < F.q(); ++t) pts.push_back(nu_map(F, 1, t, k));
    pts.push_back(nu_map(F, 0, 1, k));
    return make_arc(std::move(field), k, std::move(pts), false);
}

// The unique normal rational curve through k+2 points of an arc (q >= k+1).
inline Arc nrc_through(FieldPtr field, std::uint32_t k, const std::vector<Vec>& pts) {
    const Field& F = *field;
    if (pts.size() != k + 2) throw std::invalid_argument("nrc_through: need k+2 points");
    if (F.q() < k + 1) throw std::invalid_argument("nrc_through: requires q >= k+1");
    Mat basis(pts.begin() + 1, pts.begin() + 1 + k);
    const Vec u = coords_in_span(F, basis, pts.front());
    const Vec v = coords_in_span(F, basis, pts.back());
    for (std::uint32_t i = 0; i < k; ++i)
        if (u[i] == 0 || v[i] == 0)
            throw std::invalid_argument("nrc_through: points are not an arc");
    auto mul_forms = [&](const Vec& f, const Vec& g) {
        Vec out(f.size() + g.size() - 1, 0);
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                out[i + j] = F.add(out[i + j], F.mul(f[i], g[j]));
        return out;
    };
    // f_i = prod_{j != i} (u_j^{-1} X1 - v_j^{-1} X2), coeff index = power of X2
    std::vector<Vec> fi(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        Vec f = {1};
        for (std::uint32_t j = 0; j < k; ++j) {
            if (j == i) continue;
            f = mul_forms(f, Vec{F.inv(u[j]), F.neg(F.inv(v[j]))});
        }
        fi[i] = f;
    }
    auto curve_point = [&](Elem x1, Elem x2) {
        Vec w(k);
        for (std::uint32_t i = 0; i < k; ++i) {
            Elem s = 0;
            for (std::uint32_t d = 0; d < k; ++d)
                s = F.add(s, F.mul(fi[i][d], F.mul(F.pow(x1, k - 1 - d), F.pow(x2, d))));
            w[i] = s;
        }
        return vec_mat(F, w, basis);
    };
    std::vector<Vec> out;
    out.reserve(F.q() + 1);
    for (Elem t = 0; t < F.q(); ++t) out.push_back(curve_point(1, t));
    out.push_back(curve_point(0, 1));
    return make_arc(std::move(field), k, std::move(out), false);
}

// ---- hyperovals (q even): o-polynomial families of Table 1 ----

enum class OPolyFamily {
    regular,
    translation,
    segre,
    glynn1,
    glynn2,
    payne,
    cherowitzo,
    subiaco1,
    subiaco2,
    subiaco3,
    adelaide,
};

struct OPolynomial {
    OPolyFamily family = OPolyFamily::regular;
    std::uint32_t e = 0;  // translation exponent
};

inline const char* opoly_family_name(OPolyFamily f) {
    switch (f) {
        case OPolyFamily::regular: return "regular";
        case OPolyFamily::translation: return "translation";
        case OPolyFamily::segre: return "segre";
        case OPolyFamily::glynn1: return "glynn1";
        case OPolyFamily::glynn2: return "glynn2";
        case OPolyFamily::payne: return "payne";
        case OPolyFamily::cherowitzo: return "cherowitzo";
        case OPolyFamily::subiaco1: return "subiaco1";
        case OPolyFamily::subiaco2: return "subiaco2";
        case OPolyFamily::subiaco3: return "subiaco3";
        case OPolyFamily::adelaide: return "adelaide";
    }
    return "?";
}

inline std::optional<OPolyFamily> opoly_family_from_name(const std::string& s) {
    for (auto f : {OPolyFamily::regular, OPolyFamily::translation, OPolyFamily::segre,
                   OPolyFamily::glynn1, OPolyFamily::glynn2, OPolyFamily::payne,
                   OPolyFamily::cherowitzo, OPolyFamily::subiaco1, OPolyFamily::subiaco2,
                   OPolyFamily::subiaco3, OPolyFamily::adelaide})
        if (s == opoly_family_name(f)) return f;
    return std::nullopt;
}

namespace detail {

// Embedding of F = GF(2^h) into its quadratic extension K = GF(2^{2h}),
// realized by mapping the residue class of X to a root of F's modulus in K.
struct QuadraticExtension {
    FieldPtr K;
    std::vector<Elem> fwd;  // F code -> K code
    std::vector<Elem> bwd;  // K code -> F code, or ~0u if outside the subfield

    explicit QuadraticExtension(const Field& F) {
        K = std::make_shared<Field>(F.p(), 2 * F.h());
        Elem root = 0;
        bool found = false;
        for (Elem cand = 0; cand < K->q(); ++cand) {
            Elem acc = 0, xp = 1;
            for (std::uint32_t c : F.modulus()) {
                acc = K->add(acc, K->mul(c % F.p(), xp));
                xp = K->mul(xp, cand);
            }
            if (acc == 0) {
                root = cand;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("quadratic extension: modulus has no root");
        fwd.assign(F.q(), 0);
        bwd.assign(K->q(), ~0u);
        for (Elem a = 0; a < F.q(); ++a) {
            Elem acc = 0, xp = 1;
            for (std::uint32_t d : F.coeffs(a)) {
                acc = K->add(acc, K->mul(d, xp));
                xp = K->mul(xp, root);
            }
            fwd[a] = acc;
            bwd[acc] = a;
        }
    }
};

inline void require_odd_h(const Field& F, const char* fam) {
    if (F.h() % 2 == 0)
        throw std::invalid_argument(std::string(fam) + ": requires q = 2^h with h odd");
}

inline std::uint32_t glynn_sigma(const Field& F) { return 1u << ((F.h() + 1) / 2); }

}  // namespace detail

// Values f(t) of the chosen o-polynomial for t in field order.
inline std::vector<Elem> opoly_values(const Field& F, const OPolynomial& spec,
                                      Params* params = nullptr) {
    if (F.p() != 2) throw std::invalid_argument("hyperoval: requires even characteristic");
    const std::uint32_t q = F.q(), h = F.h();
    std::vector<Elem> vals(q);
    auto half = [&](Elem x) { return F.pow_frac(x, 1, 2); };
    switch (spec.family) {
        case OPolyFamily::regular:
            for (Elem t = 0; t < q; ++t) vals[t] = F.mul(t, t);
            break;
        case OPolyFamily::translation: {
            if (std::gcd(spec.e, h) != 1)
                throw std::invalid_argument("translation: requires (e,h) = 1");
            const std::uint64_t e2 = 1ull << (spec.e % h);
            for (Elem t = 0; t < q; ++t) vals[t] = F.pow(t, e2);
            if (params) params->emplace_back("e", std::to_string(spec.e % h));
            break;
        }
        case OPolyFamily::segre:
            detail::require_odd_h(F, "segre");
            for (Elem t = 0; t < q; ++t) vals[t] = F.pow(t, 6);
            break;
        case OPolyFamily::glynn1: {
            detail::require_odd_h(F, "glynn1");
            const std::uint64_t s = detail::glynn_sigma(F);
            for (Elem t = 0; t < q; ++t) vals[t] = F.pow(t, 3 * s + 4);
            break;
        }
        case OPolyFamily::glynn2: {
            detail::require_odd_h(F, "glynn2");
            const std::uint64_t s = detail::glynn_sigma(F);
            std::uint64_t lambda;
            if (h % 4 == 3)
                lambda = 1ull << ((h + 1) / 4);  // h = 4m-1, lambda = 2^m
            else
                lambda = 1ull << ((3 * h + 1) / 4);  // h = 4m+1, lambda = 2^{3m+1}
            for (Elem t = 0; t < q; ++t) vals[t] = F.pow(t, s + lambda);
            if (params) params->emplace_back("lambda", std::to_string(lambda));
            break;
        }
        case OPolyFamily::payne:
            detail::require_odd_h(F, "payne");
            for (Elem t = 0; t < q; ++t)
                vals[t] = F.add(F.add(F.pow_frac(t, 1, 6), F.pow_frac(t, 3, 6)),
                                F.pow_frac(t, 5, 6));
            break;
        case OPolyFamily::cherowitzo: {
            detail::require_odd_h(F, "cherowitzo");
            const std::uint64_t s = detail::glynn_sigma(F);
            for (Elem t = 0; t < q; ++t)
                vals[t] = F.add(F.add(F.pow(t, s), F.pow(t, s + 2)), F.pow(t, 3 * s + 4));
            break;
        }
        case OPolyFamily::subiaco1: {
            if (h % 4 != 2) throw std::invalid_argument("subiaco1: requires h = 4r+2");
            Elem omega = 0;
            bool found = false;
            for (Elem w = 0; w < q; ++w)
                if (F.add(F.add(F.mul(w, w), w), 1) == 0) {
                    omega = w;
                    found = true;
                    break;
                }
            if (!found) throw std::invalid_argument("subiaco1: no omega with omega^2+omega+1=0");
            const Elem w2 = F.mul(omega, omega);
            for (Elem t = 0; t < q; ++t) {
                const Elem t2 = F.mul(t, t), t4 = F.mul(t2, t2);
                const Elem den = F.add(F.add(t4, F.mul(w2, t2)), 1);
                if (den == 0) throw std::domain_error("subiaco1: denominator vanishes");
                vals[t] = F.add(F.div(F.mul(w2, F.add(t4, t)), den), half(t));
            }
            if (params) params->emplace_back("omega", std::to_string(omega));
            break;
        }
        case OPolyFamily::subiaco2: {
            if (h % 4 != 2) throw std::invalid_argument("subiaco2: requires h = 4r+2");
            detail::QuadraticExtension ext(F);
            const Field& K = *ext.K;
            Elem delta = 0, zeta_used = 0;
            bool found = false;
            for (Elem z = 2; z < K.q() && !found; ++z) {
                if (K.mult_order(z) != K.q() - 1) continue;
                const Elem dE = K.add(K.pow(z, q - 1), K.pow(z, K.q() - q));  // zeta^{q-1} + zeta^{1-q}
                const Elem d = ext.bwd[dE];
                if (d == ~0u || d == 0) continue;
                delta = d;
                zeta_used = z;
                found = true;
            }
            if (!found) throw std::invalid_argument("subiaco2: no admissible delta");
            const Elem d2 = F.mul(delta, delta), d3 = F.mul(d2, delta), d5 = F.mul(d2, d3);
            for (Elem t = 0; t < q; ++t) {
                const Elem t2 = F.mul(t, t), t3 = F.mul(t2, t), t4 = F.mul(t2, t2);
                const Elem den = F.add(F.add(t4, F.mul(d2, t2)), 1);
                if (den == 0) throw std::domain_error("subiaco2: denominator vanishes");
                const Elem num = F.add(F.add(F.mul(d2, t4), F.mul(d5, t3)),
                                       F.add(F.mul(d2, t2), F.mul(d3, t)));
                vals[t] = F.add(F.div(num, den), half(F.div(t, delta)));
            }
            if (params) {
                params->emplace_back("zeta", std::to_string(zeta_used));
                params->emplace_back("delta", std::to_string(delta));
            }
            break;
        }
        case OPolyFamily::subiaco3: {
            if (h % 4 == 2) throw std::invalid_argument("subiaco3: requires h != 4r+2");
            Elem delta = 0;
            bool found = false;
            for (Elem d = 1; d < q; ++d)
                if (F.trace2(F.inv(d)) == 1) {
                    delta = d;
                    found = true;
                    break;
                }
            if (!found) throw std::invalid_argument("subiaco3: no delta with T2(1/delta) = 1");
            const Elem d2 = F.mul(delta, delta), d3 = F.mul(d2, delta), d4 = F.mul(d2, d2);
            for (Elem t = 0; t < q; ++t) {
                const Elem t2 = F.mul(t, t), t3 = F.mul(t2, t), t4 = F.mul(t2, t2);
                const Elem den = F.add(F.add(t4, F.mul(d2, t2)), 1);
                if (den == 0) throw std::domain_error("subiaco3: denominator vanishes");
                const Elem num =
                    F.add(F.add(F.mul(F.add(d4, d2), t3), F.mul(d3, t2)), F.mul(d2, t));
                vals[t] = F.add(F.div(num, den), half(F.div(t, delta)));
            }
            if (params) params->emplace_back("delta", std::to_string(delta));
            break;
        }
        case OPolyFamily::adelaide: {
            if (h % 2 != 0 || h < 4)
                throw std::invalid_argument("adelaide: requires h even, h >= 4");
            detail::QuadraticExtension ext(F);
            const Field& K = *ext.K;
            auto T = [&](Elem x) { return K.add(x, K.pow(x, q)); };
            const std::uint32_t m1 = (q - 1) / 3 % (q + 1);
            bool built = false;
            for (std::uint32_t m : {m1, q + 1 - m1}) {
                for (Elem b = 0; b < K.q() && !built; ++b) {
                    if (b == 1 || K.pow(b, q + 1) != 1 || b == 0) continue;
                    const Elem Tb = T(b);
                    if (Tb == 0) continue;
                    const Elem bq = K.pow(b, q);
                    const Elem Tbm = T(K.pow(b, m));
                    bool good = true;
                    for (Elem t = 0; t < q && good; ++t) {
                        const Elem te = ext.fwd[t];
                        const Elem rte = ext.fwd[half(t)];
                        const Elem inner_den = K.add(K.add(te, K.mul(Tb, rte)), 1);
                        const Elem den = K.mul(Tb, K.pow(inner_den, m - 1));
                        if (den == 0) {
                            good = false;
                            break;
                        }
                        const Elem term1 = K.div(K.mul(Tbm, K.add(te, 1)), Tb);
                        const Elem term2 = K.div(T(K.pow(K.add(K.mul(b, te), bq), m)), den);
                        const Elem v = K.add(K.add(term1, term2), rte);
                        if (ext.bwd[v] == ~0u) {
                            good = false;
                            break;
                        }
                        vals[t] = ext.bwd[v];
                    }
                    if (!good) continue;
                    std::vector<Vec> pts;
                    for (Elem t = 0; t < q; ++t) pts.push_back({1, t, vals[t]});
                    pts.push_back({0, 0, 1});
                    pts.push_back({0, 1, 0});
                    if (is_arc(F, pts, 3).ok) {
                        if (params) {
                            params->emplace_back("beta", std::to_string(b));
                            params->emplace_back("m", std::to_string(m));
                        }
                        built = true;
                    }
                }
                if (built) break;
            }
            if (!built) throw std::invalid_argument("adelaide: no admissible (beta, m)");
            break;
        }
    }
    return vals;
}

// {(1,t,f(t))} followed by (0,0,1) and (0,1,0); a (q+2)-point arc.
inline Arc hyperoval(FieldPtr field, const OPolynomial& spec, Params* params = nullptr) {
    const Field& F = *field;
    const auto vals = opoly_values(F, spec, params);
    std::vector<Vec> pts;
    pts.reserve(F.q() + 2);
    for (Elem t = 0; t < F.q(); ++t) pts.push_back({1, t, vals[t]});
    pts.push_back({0, 0, 1});
    pts.push_back({0, 1, 0});
    return make_arc(std::move(field), 3, std::move(pts));
}

// ---- special arcs ----

// Segre's (q+1)-arc {(1, t, t^sigma, t^{sigma+1})} u {e4} in PG(3,2^h), (e,h)=1.
inline Arc special_segre3space(FieldPtr field, std::uint32_t e) {
    const Field& F = *field;
    if (F.p() != 2) throw std::invalid_argument("segre3space: requires even characteristic");
    if (std::gcd(e, F.h()) != 1) throw std::invalid_argument("segre3space: requires (e,h) = 1");
    const std::uint64_t s = 1ull << (e % F.h());
    std::vector<Vec> pts;
    for (Elem t = 0; t < F.q(); ++t)
        pts.push_back({1, t, F.pow(t, s), F.pow(t, s + 1)});
    pts.push_back({0, 0, 0, 1});
    return make_arc(std::move(field), 4, std::move(pts));
}

// Glynn's 10-point arc in PG(4,9): {(1, t, t^2 + eta t^6, t^3, t^4)} u {e5}, eta^4 = -1.
inline Arc special_glynn(FieldPtr field, Params* params = nullptr) {
    const Field& F = *field;
    if (F.q() != 9) throw std::invalid_argument("glynn: defined over GF(9)");
    Elem eta = 0;
    for (Elem x = 1; x < F.q(); ++x)
        if (F.pow(x, 4) == F.neg(1)) {
            eta = x;
            break;
        }
    if (eta == 0) throw std::logic_error("glynn: no eta with eta^4 = -1");
    if (params) params->emplace_back("eta", std::to_string(eta));
    std::vector<Vec> pts;
    for (Elem t = 0; t < F.q(); ++t)
        pts.push_back({1, t, F.add(F.mul(t, t), F.mul(eta, F.pow(t, 6))), F.pow(t, 3),
                       F.pow(t, 4)});
    pts.push_back({0, 0, 0, 0, 1});
    return make_arc(std::move(field), 5, std::move(pts));
}

// Kestenband arc: V(I) n V(H) with H^{sqrt q} = H^t and irreducible characteristic
// polynomial; size q - sqrt(q) + 1. H found by row-major search unless supplied.
inline Arc special_kestenband(FieldPtr field, std::optional<Mat> H_in = std::nullopt,
                              Params* params = nullptr) {
    const Field& F = *field;
    if (F.h() % 2 != 0 || F.q() <= 4)
        throw std::invalid_argument("kestenband: requires square q > 4");
    std::uint32_t rq = 1;
    for (std::uint32_t i = 0; i < F.h() / 2; ++i) rq *= F.p();
    auto conj = [&](Elem x) { return F.pow(x, rq); };
    auto hermitian_ok = [&](const Mat& H) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (conj(H[i][j]) != H[j][i]) return false;
        return true;
    };
    auto charpoly_irreducible = [&](const Mat& H) {
        const Elem tr = F.add(F.add(H[0][0], H[1][1]), H[2][2]);
        Elem c2 = 0;
        for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}})
            c2 = F.add(c2, F.sub(F.mul(H[i][i], H[j][j]), F.mul(H[i][j], H[j][i])));
        const Elem dd = det(F, H);
        for (Elem x = 0; x < F.q(); ++x) {
            const Elem x2 = F.mul(x, x);
            const Elem v = F.sub(F.add(F.sub(F.mul(x2, x), F.mul(tr, x2)), F.mul(c2, x)), dd);
            if (v == 0) return false;
        }
        return true;
    };
    Mat H;
    if (H_in) {
        H = *H_in;
        if (H.size() != 3 || !hermitian_ok(H))
            throw std::invalid_argument("kestenband: H fails the Hermitian condition");
        if (!charpoly_irreducible(H))
            throw std::invalid_argument("kestenband: characteristic polynomial is reducible");
    } else {
        std::vector<Elem> sub;  // subfield elements, ascending
        for (Elem x = 0; x < F.q(); ++x)
            if (conj(x) == x) sub.push_back(x);
        bool found = false;
        for (Elem a11 : sub) {
            for (Elem a12 = 0; a12 < F.q() && !found; ++a12)
                for (Elem a13 = 0; a13 < F.q() && !found; ++a13)
                    for (Elem a22 : sub) {
                        if (found) break;
                        for (Elem a23 = 0; a23 < F.q() && !found; ++a23)
                            for (Elem a33 : sub) {
                                Mat cand = {{a11, a12, a13},
                                            {conj(a12), a22, a23},
                                            {conj(a13), conj(a23), a33}};
                                if (charpoly_irreducible(cand)) {
                                    H = std::move(cand);
                                    found = true;
                                    break;
                                }
                            }
                    }
            if (found) break;
        }
        if (!found) throw std::logic_error("kestenband: no admissible H");
    }
    if (params) {
        std::string s;
        for (const auto& row : H)
            for (Elem x : row) s += (s.empty() ? "" : ",") + std::to_string(x);
        params->emplace_back("H", s);
    }
    auto hermitian_eval = [&](const Mat& M, const Vec& x) {
        Elem s = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                s = F.add(s, F.mul(F.mul(x[i], M[i][j]), conj(x[j])));
        return s;
    };
    const Mat I3 = identity_matrix(F, 3);
    std::vector<Vec> pts;
    for (std::uint64_t i = 0, n = point_count(3, F.q()); i < n; ++i) {
        Vec x = point_at(F, 3, i);
        if (hermitian_eval(I3, x) == 0 && hermitian_eval(H, x) == 0) pts.push_back(x);
    }
    if (pts.size() != F.q() - rq + 1) throw std::logic_error("kestenband: unexpected size");
    return make_arc(std::move(field), 3, std::move(pts));
}

// Columns of a dual-code generator as an n-point arc in PG(n-k-1, q).
inline Arc dual_arc(const Arc& A) {
    const Field& F = A.F();
    const std::size_t n = A.size();
    if (n < A.k + 2) throw std::invalid_argument("dual_arc: need |A| >= k+2");
    Mat gen(A.k, Vec(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::uint32_t i = 0; i < A.k; ++i) gen[i][j] = A.points[j][i];
    Mat dual = nullspace(F, gen);
    if (dual.size() != n - A.k) throw std::logic_error("dual_arc: unexpected dual dimension");
    std::vector<Vec> pts(n, Vec(dual.size()));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < dual.size(); ++i) pts[j][i] = dual[i][j];
        if (is_zero_vec(pts[j])) throw std::logic_error("dual_arc: zero column");
    }
    return make_arc(A.field, static_cast<std::uint32_t>(n - A.k), std::move(pts));
}

// Every point x with A u {x} still an arc; empty iff A is complete.
inline std::vector<ProjPoint> extensions(const Arc& A) {
    const Field& F = A.F();
    const std::uint32_t k = A.k;
    const std::uint64_t np = point_count(k, F.q());
    if (np > detail::sieve_guard) throw std::invalid_argument("extensions: point space too large");
    std::vector<std::uint8_t> marks(np, 0);
    const std::size_t n = A.size();
    const std::size_t span_size = std::min<std::size_t>(n, k - 1);
    // mark all points on spans of (k-1)-subsets (or of all of A when |A| < k-1)
    if (span_size > 0)
        for_each_combination(n, span_size, [&](const std::vector<std::size_t>& comb) {
            std::vector<Vec> span;
            span.reserve(span_size);
            for (auto i : comb) span.push_back(A.points[i]);
            for (auto& sp : flat_points(F, span)) marks[point_index(F, sp)] = 1;
        });
    std::vector<ProjPoint> out;
    for (std::uint64_t i = 0; i < np; ++i) {
        if (marks[i]) continue;
        ProjPoint p;
        p.coords = point_at(F, k, i);
        out.push_back(std::move(p));
    }
    return out;
}

// Number of hyperplanes meeting A exactly in the (k-2)-subset S (Lemma-of-tangents count).
inline std::size_t hyperplanes_meeting_exactly(const Arc& A, const std::vector<std::size_t>& S) {
    const Field& F = A.F();
    std::vector<Vec> span;
    for (auto i : S) span.push_back(A.points.at(i));
    std::size_t cnt = 0;
    for (const auto& form : hyperplanes_through(F, span)) {
        bool clean = true;
        for (std::size_t j = 0; j < A.size() && clean; ++j) {
            if (std::find(S.begin(), S.end(), j) != S.end()) continue;
            if (eval_form(F, form, A.points[j]) == 0) clean = false;
        }
        if (clean) ++cnt;
    }
    return cnt;
}

}  // namespace arclab
