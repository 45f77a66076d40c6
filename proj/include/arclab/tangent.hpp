// The lemma-of-tangents machinery: the tangent forms f_S at every (k-2)-subset,
// the scaling recursion that fixes their scalars, the g-function on ordered
// (k-1)-tuples, and the sum equations associated with an arc.
//
// Conventions (all relative to the arc's stored order and raw representatives):
//  * a subset S is kept as an ascending index tuple; f_S treats S as unordered;
//  * permutation parities are inversion counts against the arc index order;
//  * "union" of an ordered set with an element means appending it.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "arclab/arc.hpp"
#include "arclab/combinat.hpp"
#include "arclab/geometry.hpp"

namespace arclab {

// The t hyperplanes through <S> meeting the arc in precisely S.
inline std::vector<LinearForm> tangent_forms(const Arc& A, const IndexTuple& S) {
    const Field& F = A.F();
    if (S.size() != A.k - 2u) throw std::invalid_argument("tangent_forms: |S| must be k-2");
    std::vector<Vec> span;
    for (auto i : S) span.push_back(A.points.at(i));
    std::vector<LinearForm> out;
    for (auto& form : hyperplanes_through(F, span)) {
        bool clean = true;
        for (std::size_t j = 0; j < A.size() && clean; ++j) {
            if (std::find(S.begin(), S.end(), j) != S.end()) continue;
            if (eval_form(F, form, A.points[j]) == 0) clean = false;
        }
        if (clean) out.push_back(std::move(form));
    }
    if (static_cast<std::int64_t>(out.size()) != A.t())
        throw std::logic_error("tangent_forms: count differs from q+k-1-|A|");
    return out;
}

namespace detail {

inline std::size_t inversions(const IndexTuple& c) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c[i] > c[j]) ++s;
    return s;
}

}  // namespace detail

// All f_S with the recursion-defined scaling fixed; f_E itself is normalized to evaluate
// to 1 at the first arc point outside E.
class TangentSystem {
public:
    static TangentSystem build_scaled(const Arc& A) {
        TangentSystem sys(A);
        if (sys.t_ < 1) throw std::invalid_argument("tangent system: t must be >= 1");
        sys.scale_all();
        return sys;
    }

    // Unscaled system (every scalar 1); enough for the scaling-independent checks.
    static TangentSystem build_unscaled(const Arc& A) { return TangentSystem(A); }

    const Arc& arc() const { return arc_; }
    std::int64_t t() const { return t_; }

    // f_S evaluated at an arbitrary coordinate vector.
    Elem f_eval(IndexTuple S, const Vec& x) const {
        std::sort(S.begin(), S.end());
        const auto it = fS_.find(S);
        if (it == fS_.end()) throw std::invalid_argument("tangent system: unknown subset");
        const Field& F = arc_.F();
        Elem v = it->second.scale;
        for (const auto& form : it->second.forms) v = F.mul(v, eval_form(F, form, x));
        return v;
    }

    Elem f_eval_point(IndexTuple S, std::size_t a) const { return f_eval(std::move(S), arc_.points.at(a)); }

    // g(C) for an ordered (k-1)-tuple: (-1)^{s(t+1)} f_{S}(a) where S is the
    // ordered prefix, a the final entry, and s the parity sorting S into arc
    // order. With the prefix parity (the evaluated element keeps its place)
    // the permutation law g(C^sigma) = (-1)^{s(sigma)(t+1)} g(C) holds.
    Elem g_value(const IndexTuple& C) const {
        if (C.size() != arc_.k - 1u) throw std::invalid_argument("g_value: |C| must be k-1");
        for (std::size_t i = 0; i < C.size(); ++i)
            for (std::size_t j = i + 1; j < C.size(); ++j)
                if (C[i] == C[j]) throw std::invalid_argument("g_value: repeated index");
        const Field& F = arc_.F();
        IndexTuple S(C.begin(), C.end() - 1);
        const std::size_t s = detail::inversions(S);
        Elem v = f_eval_point(std::move(S), C.back());
        if ((s & 1u) && ((t_ + 1) & 1)) v = F.neg(v);
        return v;
    }

private:
    explicit TangentSystem(const Arc& A) : arc_(A), t_(A.t()) {
        if (arc_.size() < arc_.k) throw std::invalid_argument("tangent system: |A| < k");
        if (t_ < 0) throw std::invalid_argument("tangent system: negative t");
        for_each_combination(arc_.size(), arc_.k - 2u, [&](const IndexTuple& S) {
            fS_.emplace(S, Entry{tangent_forms(arc_, S), 1});
        });
    }

    struct Entry {
        std::vector<LinearForm> forms;
        Elem scale;
    };

    // Scaling recursion, processed in increasing |S \ E| so that every
    // right-hand side has already been fixed.
    void scale_all() {
        const Field& F = arc_.F();
        const std::size_t k2 = arc_.k - 2u;
        IndexTuple E = first_combination(k2);  // the first k-2 arc elements
        // base normalization: f_E = 1 at the first point outside E
        {
            auto& entry = fS_.at(E);
            const Elem v = f_eval(E, arc_.points[k2]);
            entry.scale = F.inv(v);
        }
        std::vector<IndexTuple> order;
        for (auto& [S, e] : fS_) order.push_back(S);
        std::stable_sort(order.begin(), order.end(), [&](const IndexTuple& a, const IndexTuple& b) {
            return outside_count(a, k2) < outside_count(b, k2);
        });
        for (const auto& S : order) {
            if (outside_count(S, k2) == 0) continue;
            // e: first element of E \ S; a: last element of S \ E
            std::size_t e = 0;
            while (std::find(S.begin(), S.end(), e) != S.end()) ++e;
            std::size_t a = S.back();  // S ascending, so the last element outside E is max(S)
            IndexTuple S2;
            for (auto i : S)
                if (i != a) S2.push_back(i);
            S2.push_back(e);
            std::sort(S2.begin(), S2.end());
            // parity ordering concat(S, e) into arc order
            std::size_t s = 0;
            for (auto i : S)
                if (i > e) ++s;
            Elem rhs = f_eval_point(S2, a);
            if ((s & 1u) && ((t_ + 1) & 1)) rhs = F.neg(rhs);
            auto& entry = fS_.at(S);
            entry.scale = 1;
            const Elem cur = f_eval(S, arc_.points[e]);
            entry.scale = F.div(rhs, cur);
        }
    }

    static std::size_t outside_count(const IndexTuple& S, std::size_t k2) {
        std::size_t c = 0;
        for (auto i : S)
            if (i >= k2) ++c;  // E = {0..k-3}
        return c;
    }

    Arc arc_;
    std::int64_t t_;
    std::map<IndexTuple, Entry> fS_;
};

// Coordinate-free lemma of tangents (scaling-independent): with D a (k-3)-subset
// and x,y,z distinct points off D,
//   f_{D+x}(y) f_{D+y}(z) f_{D+z}(x) = (-1)^{t+1} f_{D+y}(x) f_{D+z}(y) f_{D+x}(z).
inline bool check_lemma_of_tangents(const TangentSystem& sys, IndexTuple D, std::size_t x,
                                    std::size_t y, std::size_t z) {
    const Arc& A = sys.arc();
    const Field& F = A.F();
    if (D.size() != A.k - 3u) throw std::invalid_argument("lemma of tangents: |D| must be k-3");
    IndexTuple all = D;
    all.push_back(x);
    all.push_back(y);
    all.push_back(z);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("lemma of tangents: D, x, y, z must be disjoint");
    auto f = [&](std::size_t w, std::size_t at) {
        IndexTuple S = D;
        S.push_back(w);
        return sys.f_eval_point(std::move(S), at);
    };
    const Elem lhs = F.mul(F.mul(f(x, y), f(y, z)), f(z, x));
    Elem rhs = F.mul(F.mul(f(y, x), f(z, y)), f(x, z));
    if ((sys.t() + 1) & 1) rhs = F.neg(rhs);
    return lhs == rhs;
}

inline bool check_lemma_of_tangents(const Arc& A, const IndexTuple& D, std::size_t x,
                                    std::size_t y, std::size_t z) {
    return check_lemma_of_tangents(TangentSystem::build_unscaled(A), D, x, y, z);
}

// Scaled pairwise law: f_{D+x}(y) = (-1)^{s(sigma)(t+1)} f_{D+y}(x),
// sigma ordering (D+x, y) as (D+y, x).
inline bool check_scaled_pairwise(const TangentSystem& sys, const IndexTuple& D, std::size_t x,
                                  std::size_t y) {
    const Field& F = sys.arc().F();
    IndexTuple tx(D), ty(D);
    tx.push_back(x);
    std::sort(tx.begin(), tx.end());
    tx.push_back(y);
    ty.push_back(y);
    std::sort(ty.begin(), ty.end());
    ty.push_back(x);
    const std::size_t s = (detail::inversions(tx) + detail::inversions(ty)) & 1u;
    IndexTuple Sx(D), Sy(D);
    Sx.push_back(x);
    Sy.push_back(y);
    const Elem lhs = sys.f_eval_point(std::move(Sx), y);
    Elem rhs = sys.f_eval_point(std::move(Sy), x);
    if (s && ((sys.t() + 1) & 1)) rhs = F.neg(rhs);
    return lhs == rhs;
}

// det(u, C) with C in arc order (ascending indices).
inline Elem det_arc(const Arc& A, const Vec& u, IndexTuple C) {
    std::sort(C.begin(), C.end());
    std::vector<Vec> rows;
    rows.reserve(C.size());
    for (auto i : C) rows.push_back(A.points.at(i));
    return det_ordered(A.F(), u, rows);
}

// Sum equation: over the (k-1)-subsets C of E containing S,
// g(C) prod_{u in E \ C} det(u,C)^{-1}; zero on genuine arcs.
inline Elem sum_equation(const TangentSystem& sys, const IndexTuple& E, const IndexTuple& S) {
    const Arc& A = sys.arc();
    const Field& F = A.F();
    if (E.size() != A.k + static_cast<std::size_t>(sys.t()))
        throw std::invalid_argument("sum_equation: |E| must be k+t");
    if (S.size() != A.k - 2u) throw std::invalid_argument("sum_equation: |S| must be k-2");
    for (auto i : S)
        if (std::find(E.begin(), E.end(), i) == E.end())
            throw std::invalid_argument("sum_equation: S must lie inside E");
    Elem total = 0;
    for (auto e : E) {
        if (std::find(S.begin(), S.end(), e) != S.end()) continue;
        IndexTuple C = S;
        C.push_back(e);
        std::sort(C.begin(), C.end());
        Elem term = sys.g_value(C);
        for (auto u : E) {
            if (std::find(C.begin(), C.end(), u) != C.end()) continue;
            term = F.div(term, det_arc(A, A.points.at(u), C));
        }
        total = F.add(total, term);
    }
    return total;
}

// Delta variant (k <= p): sum over (k-1)-subsets C of Delta of the same summand.
inline Elem delta_equation(const TangentSystem& sys, const IndexTuple& E,
                           const IndexTuple& Delta) {
    const Arc& A = sys.arc();
    const Field& F = A.F();
    if (A.k > F.p()) throw std::invalid_argument("delta_equation: requires k <= p");
    if (E.size() != A.k + static_cast<std::size_t>(sys.t()))
        throw std::invalid_argument("delta_equation: |E| must be k+t");
    if (Delta.size() != static_cast<std::size_t>(sys.t()) + 2)
        throw std::invalid_argument("delta_equation: |Delta| must be t+2");
    for (auto i : Delta)
        if (std::find(E.begin(), E.end(), i) == E.end())
            throw std::invalid_argument("delta_equation: Delta must lie inside E");
    Elem total = 0;
    if (Delta.size() < A.k - 1u) return total;  // empty sum
    for_each_combination(Delta.size(), A.k - 1u, [&](const IndexTuple& pick) {
        IndexTuple C;
        for (auto i : pick) C.push_back(Delta[i]);
        std::sort(C.begin(), C.end());
        Elem term = sys.g_value(C);
        for (auto u : E) {
            if (std::find(C.begin(), C.end(), u) != C.end()) continue;
            term = F.div(term, det_arc(A, A.points.at(u), C));
        }
        total = F.add(total, term);
    });
    return total;
}

}  // namespace arclab
