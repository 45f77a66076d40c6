// Projective equivalence of arcs and the exhaustive, equivalence-reduced
// census of arcs at small q.
//
// Search design: every arc of size >= k+1 contains a frame and PGL(k,q) acts
// regularly on ordered frames, so arcs containing the standard frame
// {e_1,...,e_k, e_1+...+e_k} meet every equivalence class. The census extends
// the frame by points in increasing canonical order, pruning through a secant
// sieve with reference counts, then separates classes by a canonical frame
// signature and verifies the class representatives pairwise.
#pragma once

#include <atomic>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "arclab/arc.hpp"
#include "arclab/combinat.hpp"
#include "arclab/geometry.hpp"

namespace arclab {

namespace detail {

// Matrix sending the standard frame to the ordered frame given by `pts`
// (rows scaled so the all-ones point maps to the last tuple entry).
inline Mat frame_matrix(const Field& F, const std::vector<Vec>& pts, std::uint32_t k) {
    Mat basis(pts.begin(), pts.begin() + k);
    const Vec c = coords_in_span(F, basis, pts[k]);
    Mat m(k, Vec(k));
    for (std::uint32_t i = 0; i < k; ++i) {
        if (c[i] == 0) throw std::invalid_argument("frame_matrix: not a frame");
        for (std::uint32_t j = 0; j < k; ++j) m[i][j] = F.mul(c[i], basis[i][j]);
    }
    return m;
}

}  // namespace detail

// Projective equivalence test: map the first k+1 points of A (an ordered frame)
// onto every ordered frame of B and compare point sets.
inline bool equivalent(const Arc& A, const Arc& B) {
    if (*A.field != *B.field || A.k != B.k || A.size() != B.size())
        throw std::invalid_argument("equivalent: mismatched parameters");
    const Field& F = A.F();
    const std::uint32_t k = A.k;
    if (A.size() < k + 1u) throw std::invalid_argument("equivalent: arcs must contain a frame");
    std::set<Vec> setB;
    for (const auto& p : B.points) setB.insert(normalized(F, p));
    std::vector<Vec> frameA(A.points.begin(), A.points.begin() + k + 1);
    const Mat Ma_inv = mat_inv(F, detail::frame_matrix(F, frameA, k));
    std::vector<std::size_t> perm(B.size());
    std::iota(perm.begin(), perm.end(), 0);
    // iterate ordered (k+1)-tuples of B's points
    std::vector<std::size_t> sel(k + 1);
    std::vector<bool> used(B.size(), false);
    bool found = false;
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (found) return;
        if (depth == k + 1u) {
            std::vector<Vec> frameB;
            for (auto i : sel) frameB.push_back(B.points[i]);
            Mat M;
            try {
                M = mat_mul(F, Ma_inv, detail::frame_matrix(F, frameB, k));
            } catch (const std::invalid_argument&) {
                return;  // unreachable for arcs: every k+1 points form a frame
            }
            for (const auto& p : A.points)
                if (!setB.count(normalized(F, vec_mat(F, p, M)))) return;
            found = true;
            return;
        }
        for (std::size_t i = 0; i < B.size() && !found; ++i) {
            if (used[i]) continue;
            used[i] = true;
            sel[depth] = i;
            self(self, depth + 1);
            used[i] = false;
        }
    };
    rec(rec, 0);
    return found;
}

// Canonical class signature: the least sorted index list over all ordered
// frames of A after mapping that frame to the standard one. Equal signatures
// characterize projective equivalence.
inline std::vector<std::uint64_t> canonical_signature(const Arc& A) {
    const Field& F = A.F();
    const std::uint32_t k = A.k;
    std::vector<std::uint64_t> best;
    std::vector<std::size_t> sel(k + 1);
    std::vector<bool> used(A.size(), false);
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == k + 1u) {
            std::vector<Vec> frame;
            for (auto i : sel) frame.push_back(A.points[i]);
            const Mat Minv = mat_inv(F, detail::frame_matrix(F, frame, k));
            std::vector<std::uint64_t> sig;
            sig.reserve(A.size());
            for (const auto& p : A.points)
                sig.push_back(point_index(F, normalized(F, vec_mat(F, p, Minv))));
            std::sort(sig.begin(), sig.end());
            if (best.empty() || sig < best) best = std::move(sig);
            return;
        }
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            sel[depth] = i;
            self(self, depth + 1);
            used[i] = false;
        }
    };
    if (A.size() < k + 1u) throw std::invalid_argument("canonical_signature: arc too small");
    rec(rec, 0);
    return best;
}

// Planar arcs of size >= 5: true iff the conic through the first five points
// contains the whole arc.
inline bool is_conic_arc(const Arc& A) {
    if (A.k != 3) throw std::invalid_argument("is_conic_arc: planar arcs only");
    if (A.size() < 5) throw std::invalid_argument("is_conic_arc: need at least 5 points");
    const Field& F = A.F();
    const Conic c = conic_through(F, {A.points.begin(), A.points.begin() + 5});
    for (const auto& p : A.points)
        if (conic_eval(F, c, p) != 0) return false;
    return true;
}

struct CensusReport {
    FieldPtr field;
    std::uint32_t k = 0;
    std::uint32_t size = 0;
    bool complete_only = false;
    std::vector<Arc> representatives;
    std::uint64_t arcs_found = 0;     // arcs containing the standard frame
    std::uint64_t nodes_visited = 0;
    std::uint64_t branches = 0;
};

namespace detail {

struct CensusWorker {
    const Field& F;
    std::uint32_t k, size;
    bool complete_only;
    std::uint64_t np;
    std::vector<std::uint32_t> counts;
    std::vector<Vec> cur;
    std::vector<std::uint64_t> cur_idx;
    std::vector<std::vector<std::uint64_t>> found;  // sorted point-index lists
    std::uint64_t nodes = 0;

    CensusWorker(const Field& f, std::uint32_t k_, std::uint32_t size_, bool comp)
        : F(f), k(k_), size(size_), complete_only(comp), np(point_count(k_, f.q())),
          counts(np, 0) {}

    void bump_spans(std::size_t last, std::int32_t delta) {
        for_each_combination(last, k - 2u, [&](const IndexTuple& S) {
            std::vector<Vec> span;
            span.reserve(k - 1);
            for (auto i : S) span.push_back(cur[i]);
            span.push_back(cur[last]);
            for (auto& sp : flat_points(F, span))
                counts[point_index(F, sp)] += delta;
        });
    }

    void push(const Vec& p) {
        cur.push_back(p);
        cur_idx.push_back(point_index(F, normalized(F, p)));
        if (cur.size() >= k - 1u) bump_spans(cur.size() - 1, 1);
    }

    void pop() {
        if (cur.size() >= k - 1u) bump_spans(cur.size() - 1, -1);
        cur.pop_back();
        cur_idx.pop_back();
    }

    bool complete_now() const {
        for (std::uint64_t i = 0; i < np; ++i)
            if (counts[i] == 0) return false;
        return true;
    }

    void dfs(std::uint64_t next) {
        ++nodes;
        if (cur.size() == size) {
            if (!complete_only || complete_now()) {
                auto idx = cur_idx;
                std::sort(idx.begin(), idx.end());
                found.push_back(std::move(idx));
            }
            return;
        }
        for (std::uint64_t i = next; i < np; ++i) {
            if (counts[i] != 0) continue;
            push(point_at(F, k, i));
            dfs(i + 1);
            pop();
        }
    }
};

}  // namespace detail

// Exhaustive census of arcs of the given size (optionally complete arcs only)
// up to projective equivalence. `jobs` splits the top-level branches across
// threads; `checkpoint` names a resumable progress file for long runs.
inline CensusReport census(FieldPtr field, std::uint32_t k, std::uint32_t size,
                           bool complete_only, unsigned jobs = 1,
                           const std::string& checkpoint = "") {
    const Field& F = *field;
    if (size < k + 1) throw std::invalid_argument("census: size must be at least k+1");
    if (point_count(k, F.q()) > detail::sieve_guard)
        throw std::invalid_argument("census: point space exceeds the search guard");
    CensusReport rep;
    rep.field = field;
    rep.k = k;
    rep.size = size;
    rep.complete_only = complete_only;

    std::vector<Vec> frame;
    for (std::uint32_t i = 0; i < k; ++i) {
        Vec e(k, 0);
        e[i] = 1;
        frame.push_back(std::move(e));
    }
    frame.emplace_back(Vec(k, 1));

    // top-level branches: candidate first extension points (or the frame itself)
    detail::CensusWorker probe(F, k, size, complete_only);
    for (const auto& p : frame) probe.push(p);
    std::vector<std::uint64_t> branch_pts;
    if (size == k + 1) {
        // the frame itself is the single arc
        if (!complete_only || probe.complete_now()) {
            auto idx = probe.cur_idx;
            std::sort(idx.begin(), idx.end());
            probe.found.push_back(std::move(idx));
        }
    } else {
        for (std::uint64_t i = 0; i < probe.np; ++i)
            if (probe.counts[i] == 0) branch_pts.push_back(i);
    }
    rep.branches = branch_pts.size();

    std::set<std::uint64_t> done_branches;
    std::vector<std::vector<std::uint64_t>> found = probe.found;
    if (!checkpoint.empty()) {
        std::ifstream in(checkpoint);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ss(line);
            std::string tag;
            ss >> tag;
            if (tag == "branch") {
                std::uint64_t b;
                ss >> b;
                done_branches.insert(b);
            } else if (tag == "arc") {
                std::vector<std::uint64_t> idx;
                std::uint64_t v;
                while (ss >> v) idx.push_back(v);
                found.push_back(std::move(idx));
            }
        }
    }

    std::vector<std::vector<std::vector<std::uint64_t>>> per_branch(branch_pts.size());
    std::vector<std::uint64_t> per_branch_nodes(branch_pts.size(), 0);
    std::atomic<std::size_t> next_branch{0};
    auto run_worker = [&]() {
        detail::CensusWorker w(F, k, size, complete_only);
        for (const auto& p : frame) w.push(p);
        while (true) {
            const std::size_t b = next_branch.fetch_add(1);
            if (b >= branch_pts.size()) break;
            if (done_branches.count(b)) continue;
            const std::uint64_t i = branch_pts[b];
            w.found.clear();
            w.nodes = 0;
            w.push(point_at(F, k, i));
            w.dfs(i + 1);
            w.pop();
            per_branch[b] = std::move(w.found);
            per_branch_nodes[b] = w.nodes;
        }
    };
    if (jobs <= 1) {
        run_worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(run_worker);
        for (auto& th : pool) th.join();
    }
    std::ofstream ck;
    if (!checkpoint.empty()) ck.open(checkpoint, std::ios::app);
    for (std::size_t b = 0; b < branch_pts.size(); ++b) {
        if (done_branches.count(b)) continue;
        for (auto& idx : per_branch[b]) {
            if (ck.is_open()) {
                ck << "arc";
                for (auto v : idx) ck << ' ' << v;
                ck << '\n';
            }
            found.push_back(std::move(idx));
        }
        rep.nodes_visited += per_branch_nodes[b];
        if (ck.is_open()) ck << "branch " << b << '\n';
    }
    rep.arcs_found = found.size();

    // deterministic class separation by canonical signature
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& idx : found) {
        std::vector<Vec> pts;
        pts.reserve(idx.size());
        for (auto i : idx) pts.push_back(point_at(F, k, i));
        Arc a = make_arc(field, k, std::move(pts), false);
        auto sig = canonical_signature(a);
        if (seen.insert(std::move(sig)).second) rep.representatives.push_back(std::move(a));
    }
    // verify representatives are pairwise inequivalent
    for (std::size_t i = 0; i < rep.representatives.size(); ++i)
        for (std::size_t j = i + 1; j < rep.representatives.size(); ++j)
            if (equivalent(rep.representatives[i], rep.representatives[j]))
                throw std::logic_error("census: signature dedup failed");
    return rep;
}

}  // namespace arclab
