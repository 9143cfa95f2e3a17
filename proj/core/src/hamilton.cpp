#include "hamres/exact.hpp"

#include <algorithm>
#include <cstdint>

#include "hamres/errors.hpp"

namespace hamres {

namespace {

// 30 is a structural ceiling for the 32-bit subset masks (and already an
// absurd memory footprint); the configurable limit sits below it.
constexpr int kStructuralLimit = 30;

void check_limit(const Graph& g, int n_limit, const char* what) {
    const int cap = std::min(n_limit, kStructuralLimit);
    if (g.vertex_count() > cap)
        throw ResourceLimitError(std::string(what) + ": n=" + std::to_string(g.vertex_count()) +
                                 " exceeds limit " + std::to_string(cap));
}

// Adjacency rows packed into one word; all subset DP solvers live below 64
// vertices by a wide margin.
std::vector<std::uint64_t> packed_adjacency(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (v != u && g.neighbors(u).test(static_cast<std::size_t>(v)))
                adj[static_cast<std::size_t>(u)] |= 1ULL << v;
    return adj;
}

// Endpoint-set DP over subsets of {1..n-1}, paths anchored at `start`.
// dp[S] = bitmask of vertices v (bit v-th of the relabeled universe) such
// that some path from start covering exactly S ends at v.
// Universe bit i represents vertex order[i]; start is excluded.
struct AnchoredPaths {
    std::vector<std::uint32_t> dp;
    std::vector<std::uint32_t> adj; // adjacency among non-start vertices, universe bits
    std::uint32_t start_adj = 0;    // universe bits adjacent to start
    std::vector<int> universe;      // universe bit -> vertex label
    int bits = 0;
};

AnchoredPaths anchored_paths(const Graph& g, int start) {
    const int n = g.vertex_count();
    AnchoredPaths r;
    r.bits = n - 1;
    r.universe.reserve(static_cast<std::size_t>(r.bits));
    std::vector<int> bit_of(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v)
        if (v != start) {
            bit_of[static_cast<std::size_t>(v)] = static_cast<int>(r.universe.size());
            r.universe.push_back(v);
        }
    r.adj.assign(static_cast<std::size_t>(r.bits), 0);
    for (int i = 0; i < r.bits; ++i) {
        const int v = r.universe[static_cast<std::size_t>(i)];
        for (int w = 0; w < n; ++w)
            if (g.neighbors(v).test(static_cast<std::size_t>(w)) && w != start)
                r.adj[static_cast<std::size_t>(i)] |=
                    1U << bit_of[static_cast<std::size_t>(w)];
        if (g.neighbors(start).test(static_cast<std::size_t>(v))) r.start_adj |= 1U << i;
    }
    r.dp.assign(static_cast<std::size_t>(1) << r.bits, 0);
    for (int i = 0; i < r.bits; ++i)
        if (r.start_adj & (1U << i)) r.dp[static_cast<std::size_t>(1) << i] = 1U << i;
    const std::uint32_t full = (r.bits == 32) ? 0xffffffffU : ((1U << r.bits) - 1);
    for (std::uint32_t s = 1; s < (1U << r.bits); ++s) {
        const std::uint32_t ends = r.dp[s];
        if (!ends) continue;
        std::uint32_t rest = full & ~s;
        while (rest) {
            const int u = __builtin_ctz(rest);
            rest &= rest - 1;
            if (r.adj[static_cast<std::size_t>(u)] & ends)
                r.dp[s | (1U << u)] |= 1U << u;
        }
    }
    return r;
}

// Reconstructs start -> ... -> (vertex at universe bit `last`) covering set s.
std::vector<int> backtrack_path(const AnchoredPaths& r, int start, std::uint32_t s, int last) {
    std::vector<int> rev;
    while (true) {
        rev.push_back(r.universe[static_cast<std::size_t>(last)]);
        const std::uint32_t prev_set = s & ~(1U << last);
        if (!prev_set) break;
        const std::uint32_t prevs = r.dp[prev_set] & r.adj[static_cast<std::size_t>(last)];
        last = __builtin_ctz(prevs);
        s = prev_set;
    }
    rev.push_back(start);
    return {rev.rbegin(), rev.rend()};
}

} // namespace

bool validate_witness(const Graph& g, const HamiltonWitness& w) {
    const int n = g.vertex_count();
    if (static_cast<int>(w.order.size()) != n) return false;
    VertexSet seen;
    for (int v : w.order) {
        if (v < 0 || v >= n || seen.test(static_cast<std::size_t>(v))) return false;
        seen.set(static_cast<std::size_t>(v));
    }
    for (std::size_t i = 0; i + 1 < w.order.size(); ++i)
        if (!g.has_edge(w.order[i], w.order[i + 1])) return false;
    if (w.kind == HamiltonWitness::Kind::cycle) {
        if (n < 3) return false;
        if (!g.has_edge(w.order.back(), w.order.front())) return false;
    }
    return true;
}

std::optional<HamiltonWitness> find_hamilton_cycle(const Graph& g, int n_limit) {
    check_limit(g, n_limit, "hamilton cycle");
    const int n = g.vertex_count();
    if (n < 3 || g.min_degree() < 2 || !g.is_connected()) return std::nullopt;
    const AnchoredPaths r = anchored_paths(g, 0);
    const std::uint32_t full = (1U << r.bits) - 1;
    const std::uint32_t closers = r.dp[full] & r.start_adj;
    if (!closers) return std::nullopt;
    HamiltonWitness w;
    w.kind = HamiltonWitness::Kind::cycle;
    w.order = backtrack_path(r, 0, full, __builtin_ctz(closers));
    return w;
}

std::optional<HamiltonWitness> hamilton_path_between(const Graph& g, int u, int v, int n_limit) {
    if (u == v) throw std::invalid_argument("hamilton_path_between: identical endpoints");
    check_limit(g, n_limit, "hamilton path");
    const int n = g.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("endpoint out of range");
    if (n == 2) {
        if (!g.has_edge(u, v)) return std::nullopt;
        return HamiltonWitness{HamiltonWitness::Kind::path, {u, v}};
    }
    if (!g.is_connected()) return std::nullopt;
    const AnchoredPaths r = anchored_paths(g, u);
    const std::uint32_t full = (1U << r.bits) - 1;
    int vbit = -1;
    for (int i = 0; i < r.bits; ++i)
        if (r.universe[static_cast<std::size_t>(i)] == v) vbit = i;
    if (!(r.dp[full] & (1U << vbit))) return std::nullopt;
    HamiltonWitness w;
    w.kind = HamiltonWitness::Kind::path;
    w.order = backtrack_path(r, u, full, vbit);
    return w;
}

HamiltonConnectivity is_hamilton_connected(const Graph& g, int n_limit) {
    check_limit(g, n_limit, "hamilton connectivity");
    const int n = g.vertex_count();
    if (n <= 1) return {true, std::nullopt};
    if (!g.is_connected()) return {false, std::make_pair(0, 1)};
    for (int u = 0; u + 1 < n; ++u) {
        const AnchoredPaths r = anchored_paths(g, u);
        const std::uint32_t full = (1U << r.bits) - 1;
        const std::uint32_t reach = (n == 2) ? (g.has_edge(0, 1) ? 1U : 0U) : r.dp[full];
        for (int i = 0; i < r.bits; ++i) {
            const int v = r.universe[static_cast<std::size_t>(i)];
            if (v > u && !(reach & (1U << i))) return {false, std::make_pair(u, v)};
        }
    }
    return {true, std::nullopt};
}

int longest_path_length(const Graph& g, int n_limit) {
    check_limit(g, n_limit, "longest path");
    const int n = g.vertex_count();
    if (n == 0) return 0;
    const std::vector<std::uint64_t> adj64 = packed_adjacency(g);
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] =
        static_cast<std::uint32_t>(adj64[static_cast<std::size_t>(v)]);
    std::vector<std::uint32_t> dp(static_cast<std::size_t>(1) << n, 0);
    for (int v = 0; v < n; ++v) dp[static_cast<std::size_t>(1) << v] = 1U << v;
    int best = 1;
    const std::uint32_t full = (n == 32) ? 0xffffffffU : ((1U << n) - 1);
    for (std::uint32_t s = 1; s <= full; ++s) {
        const std::uint32_t ends = dp[s];
        if (!ends) continue;
        best = std::max(best, __builtin_popcount(s));
        std::uint32_t rest = full & ~s;
        while (rest) {
            const int u = __builtin_ctz(rest);
            rest &= rest - 1;
            if (adj[static_cast<std::size_t>(u)] & ends) dp[s | (1U << u)] |= 1U << u;
        }
    }
    return best - 1;
}

} // namespace hamres
