#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace hamres {

// C(n, k) saturating at int64 max; used for enumeration budgeting only.
inline long long binomial_saturating(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    constexpr long long kMax = std::numeric_limits<long long>::max();
    long long result = 1;
    for (long long i = 1; i <= k; ++i) {
        if (result > kMax / (n - k + i)) return kMax;
        result = result * (n - k + i) / i;
    }
    return result;
}

// Visits every k-subset of {0..m-1} in lexicographic order. The callback
// receives the current subset as a vector of ascending indices and returns
// false to stop early; the function returns false iff stopped.
template <typename F>
bool for_each_combination(int m, int k, F&& visit) {
    if (k < 0 || k > m) return true;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!visit(static_cast<const std::vector<int>&>(idx))) return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace hamres
