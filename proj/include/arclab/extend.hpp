// Extendability obstructions: the P_n linear system over the (k-1)-subsets of
// an arc, its nullspace, and the search for all-nonzero solutions.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arclab/arc.hpp"
#include "arclab/combinat.hpp"
#include "arclab/linalg.hpp"
#include "arclab/tangent.hpp"

namespace arclab {

struct PnMatrix {
    Mat entries;  // rows indexed by (S, U) pairs, columns by (k-1)-subsets
    std::vector<std::pair<IndexTuple, IndexTuple>> row_index;
    std::vector<IndexTuple> col_index;
};

// Entry ((S,U), C) is zero unless S is contained in C, in which case it is
// prod_{u in U} det(u, C); determinants vanish automatically when U meets C.
inline PnMatrix build_pn(const Arc& G, std::uint32_t n) {
    const Field& F = G.F();
    const std::size_t g = G.size();
    if (g < G.k + n) throw std::invalid_argument("build_pn: need |G| >= k+n");
    PnMatrix P;
    for_each_combination(g, G.k - 1u, [&](const IndexTuple& C) { P.col_index.push_back(C); });
    for_each_combination(g, G.k - 2u, [&](const IndexTuple& S) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < g; ++i)
            if (std::find(S.begin(), S.end(), i) == S.end()) rest.push_back(i);
        for_each_combination(rest.size(), n, [&](const IndexTuple& pick) {
            IndexTuple U;
            for (auto i : pick) U.push_back(rest[i]);
            Vec row(P.col_index.size(), 0);
            for (std::size_t c = 0; c < P.col_index.size(); ++c) {
                const IndexTuple& C = P.col_index[c];
                bool contains = true;
                for (auto s : S)
                    if (std::find(C.begin(), C.end(), s) == C.end()) {
                        contains = false;
                        break;
                    }
                if (!contains) continue;
                Elem v = 1;
                for (auto u : U) {
                    if (std::find(C.begin(), C.end(), u) != C.end()) {
                        v = 0;
                        break;
                    }
                    v = F.mul(v, det_arc(G, G.points[u], C));
                }
                row[c] = v;
            }
            P.row_index.emplace_back(S, U);
            P.entries.push_back(std::move(row));
        });
    });
    return P;
}

enum class ExtendVerdict { obstructed, possible, undecided };

struct ExtendReport {
    ExtendVerdict verdict = ExtendVerdict::undecided;
    std::uint32_t n = 0;
    std::size_t rank = 0;
    std::size_t nullity = 0;
    std::vector<Vec> witnesses;  // all-nonzero nullspace vectors (possible only)
};

inline constexpr std::uint64_t extend_search_guard = 1ull << 20;

// Necessary-condition verdict for extending G to an arc of the target size:
// obstructed when no nullspace vector of P_n has all coordinates nonzero.
inline ExtendReport extendability_verdict(const Arc& G, std::uint64_t target) {
    const Field& F = G.F();
    const std::int64_t n64 = static_cast<std::int64_t>(G.size()) +
                             static_cast<std::int64_t>(target) - F.q() - 2 * G.k + 1;
    if (n64 < 0) throw std::invalid_argument("extendability_verdict: negative n");
    const std::int64_t t = static_cast<std::int64_t>(F.q()) + G.k - 1 - static_cast<std::int64_t>(target);
    if (t < 0) throw std::invalid_argument("extendability_verdict: target exceeds q+k-1");
    ExtendReport rep;
    rep.n = static_cast<std::uint32_t>(n64);
    PnMatrix P = build_pn(G, rep.n);
    const std::size_t cols = P.col_index.size();
    Mat ns = nullspace(F, P.entries);
    rep.nullity = ns.size();
    rep.rank = cols - ns.size();
    if (ns.empty()) {
        rep.verdict = ExtendVerdict::obstructed;
        return rep;
    }
    // exhaust projective combinations of the nullspace basis
    const std::size_t d = ns.size();
    std::uint64_t est = 1;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        est *= (F.q() - 1);
        if (est > extend_search_guard) {
            rep.verdict = ExtendVerdict::undecided;
            return rep;
        }
    }
    const std::uint64_t combos = point_count(static_cast<std::uint32_t>(d), F.q());
    for (std::uint64_t i = 0; i < combos; ++i) {
        const Vec lambda = point_at(F, static_cast<std::uint32_t>(d), i);
        Vec v(cols, 0);
        for (std::size_t b = 0; b < d; ++b) {
            if (lambda[b] == 0) continue;
            for (std::size_t c = 0; c < cols; ++c)
                v[c] = F.add(v[c], F.mul(lambda[b], ns[b][c]));
        }
        bool nz = true;
        for (Elem x : v)
            if (x == 0) {
                nz = false;
                break;
            }
        if (nz) rep.witnesses.push_back(std::move(v));
    }
    rep.verdict = rep.witnesses.empty() ? ExtendVerdict::obstructed : ExtendVerdict::possible;
    return rep;
}

// The canonical nullspace witness carried by a genuine super-arc: coordinates
// alpha_{C,G} = g(C) prod_{u in G \ C} det(u,C)^{-1} computed from a tangent
// system of an arc A containing G as its first |G| points.
inline Vec alpha_vector(const TangentSystem& sys, std::size_t gsize) {
    const Arc& A = sys.arc();
    const Field& F = A.F();
    Vec out;
    for_each_combination(gsize, A.k - 1u, [&](const IndexTuple& C) {
        Elem v = sys.g_value(C);
        for (std::size_t u = 0; u < gsize; ++u) {
            if (std::find(C.begin(), C.end(), u) != C.end()) continue;
            v = F.div(v, det_arc(A, A.points[u], C));
        }
        out.push_back(v);
    });
    return out;
}

}  // namespace arclab
