#pragma once

#include <cstdint>
#include <vector>

namespace turan {

// binomial coefficient in 64 bits; callers keep n <= 128 and r <= 6 or so,
// well inside the overflow-free region used here
inline std::uint64_t binom_u64(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t acc = 1;
    for (int i = 1; i <= r; ++i) acc = acc * static_cast<std::uint64_t>(n - r + i) / i;
    return acc;
}

// visit all r-subsets of {0..n-1} as sorted index vectors, lexicographic order
template <typename F>
void for_each_subset(int n, int r, F&& visit) {
    if (r < 0 || r > n) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        visit(const_cast<const std::vector<int>&>(idx));
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// rank of a sorted r-subset of {0..n-1} in lexicographic order
inline std::uint64_t lex_rank(const std::vector<int>& t, int n) {
    std::uint64_t rank = 0;
    int r = static_cast<int>(t.size());
    int prev = -1;
    for (int j = 0; j < r; ++j) {
        for (int v = prev + 1; v < t[j]; ++v) rank += binom_u64(n - 1 - v, r - 1 - j);
        prev = t[j];
    }
    return rank;
}

inline std::vector<int> lex_unrank(std::uint64_t rank, int n, int r) {
    std::vector<int> t(r);
    int v = 0;
    for (int j = 0; j < r; ++j) {
        while (true) {
            std::uint64_t block = binom_u64(n - 1 - v, r - 1 - j);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        t[j] = v++;
    }
    return t;
}

} // namespace turan
