// Linear codes from arcs: generator matrices, exact minimum distance by full
// codeword enumeration, duality, and row-space code equality.
#pragma once

#include <cstdint>
#include <stdexcept>

#include "arclab/arc.hpp"
#include "arclab/linalg.hpp"

namespace arclab {

struct LinearCode {
    FieldPtr field;
    Mat gen;  // k x n, rank k

    const Field& F() const { return *field; }
    std::size_t n() const { return gen.empty() ? 0 : gen[0].size(); }
    std::size_t k() const { return gen.size(); }
};

inline LinearCode make_code(FieldPtr field, Mat gen) {
    LinearCode c{std::move(field), std::move(gen)};
    if (c.gen.empty()) throw std::invalid_argument("code: empty generator");
    if (rank(c.F(), c.gen) != c.k()) throw std::invalid_argument("code: generator is rank-deficient");
    return c;
}

// Generator whose columns are the arc's raw representatives in order.
inline LinearCode code_from_arc(const Arc& A) {
    if (A.size() < A.k) throw std::invalid_argument("code_from_arc: need |A| >= k");
    Mat gen(A.k, Vec(A.size()));
    for (std::size_t j = 0; j < A.size(); ++j)
        for (std::uint32_t i = 0; i < A.k; ++i) gen[i][j] = A.points[j][i];
    return make_code(A.field, std::move(gen));
}

inline constexpr std::uint64_t min_distance_guard = 1ull << 24;

// Exact minimum Hamming weight over the q^k - 1 nonzero codewords (enumerated
// projectively; weight is invariant under scaling).
inline std::uint32_t min_distance(const LinearCode& C) {
    const Field& F = C.F();
    const std::size_t k = C.k(), n = C.n();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= F.q();
        if (total > min_distance_guard)
            throw std::invalid_argument("min_distance: q^k exceeds the enumeration guard");
    }
    std::uint32_t best = static_cast<std::uint32_t>(n);
    const std::uint64_t messages = point_count(static_cast<std::uint32_t>(k), F.q());
    Vec word(n);
    for (std::uint64_t m = 0; m < messages; ++m) {
        const Vec u = point_at(F, static_cast<std::uint32_t>(k), m);
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                word[j] = F.add(word[j], F.mul(u[i], C.gen[i][j]));
        }
        std::uint32_t w = 0;
        for (Elem x : word) w += (x != 0);
        if (w < best) best = w;
        if (best == 0) break;
    }
    return best;
}

inline LinearCode dual_code(const LinearCode& C) {
    Mat d = nullspace(C.F(), C.gen);
    if (d.empty()) throw std::invalid_argument("dual_code: dual dimension is zero");
    return make_code(C.field, std::move(d));
}

inline bool same_code(const LinearCode& a, const LinearCode& b) {
    if (*a.field != *b.field || a.n() != b.n()) return false;
    return same_rowspace(a.F(), a.gen, b.gen);
}

inline bool is_mds(const LinearCode& C) {
    return min_distance(C) == C.n() - C.k() + 1;
}

// The points of a code's generator columns (used to test projective equivalence
// of codes via the associated arcs).
inline Arc arc_from_code(const LinearCode& C) {
    std::vector<Vec> pts(C.n(), Vec(C.k()));
    for (std::size_t j = 0; j < C.n(); ++j)
        for (std::size_t i = 0; i < C.k(); ++i) pts[j][i] = C.gen[i][j];
    return make_arc(C.field, static_cast<std::uint32_t>(C.k()), std::move(pts));
}

}  // namespace arclab
