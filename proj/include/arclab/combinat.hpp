// Combination enumeration over index ranges, shared by the subset sweeps.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace arclab {

using IndexTuple = std::vector<std::size_t>;

inline std::vector<std::size_t> first_combination(std::size_t r) {
    std::vector<std::size_t> c(r);
    std::iota(c.begin(), c.end(), 0);
    return c;
}

// Advance a sorted r-subset of {0..n-1}; false when exhausted.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t r = c.size();
    std::size_t pos = r;
    while (pos-- > 0) {
        if (c[pos] + (r - pos) < n) {
            ++c[pos];
            for (std::size_t j = pos + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

template <typename Fn>
void for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
    if (r > n) return;
    auto c = first_combination(r);
    do {
        fn(static_cast<const std::vector<std::size_t>&>(c));
    } while (next_combination(c, n));
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
    return v;
}

}  // namespace arclab
