#include "hamres/exact.hpp"

#include <queue>

namespace hamres {

namespace {

// Blossom-contraction augmenting search (Edmonds). O(V^3) overall, which is
// plenty for graphs a few hundred vertices wide.
struct BlossomMatcher {
    const Graph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<char> used, blossom;

    explicit BlossomMatcher(const Graph& graph)
        : g(graph),
          n(graph.vertex_count()),
          match(static_cast<std::size_t>(n), -1),
          parent(static_cast<std::size_t>(n), -1),
          base(static_cast<std::size_t>(n), 0),
          used(static_cast<std::size_t>(n), 0),
          blossom(static_cast<std::size_t>(n), 0) {}

    int lowest_common_base(int a, int b) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        while (true) {
            a = base[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = 1;
            if (match[static_cast<std::size_t>(a)] == -1) break;
            a = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
        }
        while (true) {
            b = base[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[static_cast<std::size_t>(v)] != b) {
            const int mv = match[static_cast<std::size_t>(v)];
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = 1;
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(mv)])] = 1;
            parent[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent[static_cast<std::size_t>(mv)];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i;
        used[static_cast<std::size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            const VertexSet& nb = g.neighbors(v);
            for (int to = static_cast<int>(nb._Find_first()); to < n;
                 to = static_cast<int>(nb._Find_next(static_cast<std::size_t>(to)))) {
                if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] ||
                    match[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match[static_cast<std::size_t>(to)] != -1 &&
                     parent[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] != -1)) {
                    // Odd cycle: contract the blossom rooted at the common base.
                    const int cur_base = lowest_common_base(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
                            base[static_cast<std::size_t>(i)] = cur_base;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent[static_cast<std::size_t>(to)] == -1) {
                    parent[static_cast<std::size_t>(to)] = v;
                    if (match[static_cast<std::size_t>(to)] == -1) return to;
                    used[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] = 1;
                    q.push(match[static_cast<std::size_t>(to)]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            const int pv = parent[static_cast<std::size_t>(v)];
            const int ppv = match[static_cast<std::size_t>(pv)];
            match[static_cast<std::size_t>(v)] = pv;
            match[static_cast<std::size_t>(pv)] = v;
            v = ppv;
        }
    }

    void run() {
        for (int v = 0; v < n; ++v)
            if (match[static_cast<std::size_t>(v)] == -1) {
                const int end = find_augmenting_path(v);
                if (end != -1) augment(end);
            }
    }
};

} // namespace

std::vector<int> maximum_matching(const Graph& g) {
    BlossomMatcher m(g);
    m.run();
    return m.match;
}

int max_matching_size(const Graph& g) {
    const std::vector<int> mate = maximum_matching(g);
    int matched = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[static_cast<std::size_t>(v)] != -1) ++matched;
    return matched / 2;
}

} // namespace hamres
