#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tokengraph {

// Exact C(n, k) in 64-bit arithmetic. The running value after step i is
// C(n - k + i, i), so every intermediate division is exact.
inline std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t value = 1;
    for (int i = 1; i <= k; ++i) {
        value = value * std::uint64_t(n - k + i) / std::uint64_t(i);
    }
    return value;
}

// Colexicographic rank of a strictly increasing k-subset:
//   rank(c) = sum_i C(c[i], i + 1)
// so {0,...,k-1} ranks 0 and {n-k,...,n-1} ranks C(n,k) - 1.
inline std::uint64_t subset_rank(const std::vector<int>& members) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] < 0 || (i > 0 && members[i] <= members[i - 1]))
            throw std::invalid_argument("subset members must be strictly increasing and non-negative");
        rank += binomial(members[i], int(i) + 1);
    }
    return rank;
}

// Inverse of subset_rank over k-subsets of {0, ..., n-1}.
inline std::vector<int> subset_unrank(std::uint64_t rank, int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("subset size out of range");
    if (rank >= binomial(n, k)) throw std::invalid_argument("subset rank out of range");
    std::vector<int> members(k);
    int hi = n;
    for (int i = k; i >= 1; --i) {
        int c = hi - 1;
        while (binomial(c, i) > rank) --c;
        members[i - 1] = c;
        rank -= binomial(c, i);
        hi = c;
    }
    return members;
}

// Visit every m-subset of pool (values taken in pool order) exactly once.
template <typename Fn>
void for_each_combination(const std::vector<int>& pool, int m, Fn&& fn) {
    const int p = int(pool.size());
    if (m < 0 || m > p) return;
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> subset(m);
    while (true) {
        for (int i = 0; i < m; ++i) subset[i] = pool[idx[i]];
        fn(static_cast<const std::vector<int>&>(subset));
        int j = m - 1;
        while (j >= 0 && idx[j] == p - m + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int i = j + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
    }
}

}  // namespace tokengraph
