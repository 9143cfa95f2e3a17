#include "hamres/exact.hpp"

#include <algorithm>
#include <queue>

namespace hamres {

namespace {

// Unit-capacity digraph for vertex connectivity: each vertex v splits into
// in-node 2v and out-node 2v+1 joined by a capacity-1 arc; every edge (u,v)
// contributes u_out->v_in and v_out->u_in. Max flow s_out -> t_in equals the
// minimum vertex cut separating non-adjacent s and t (Menger).
struct SplitNetwork {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit SplitNetwork(const Graph& g) : arcs(2 * static_cast<std::size_t>(g.vertex_count())) {
        const int n = g.vertex_count();
        for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, 1);
        for (const Edge& e : g.edge_set()) {
            add(2 * e.u + 1, 2 * e.v, 1);
            add(2 * e.v + 1, 2 * e.u, 1);
        }
    }

    void add(int from, int to, int cap) {
        arcs[static_cast<std::size_t>(from)].push_back(
            {to, cap, static_cast<int>(arcs[static_cast<std::size_t>(to)].size())});
        arcs[static_cast<std::size_t>(to)].push_back(
            {from, 0, static_cast<int>(arcs[static_cast<std::size_t>(from)].size()) - 1});
    }

    // BFS augmentation; stops once `cutoff` units route (the caller only
    // needs to know whether the flow beats the current best cut).
    int max_flow(int s, int t, int cutoff) {
        int flow = 0;
        std::vector<int> prev_node(arcs.size()), prev_arc(arcs.size());
        while (flow < cutoff) {
            std::fill(prev_node.begin(), prev_node.end(), -1);
            std::queue<int> q;
            q.push(s);
            prev_node[static_cast<std::size_t>(s)] = s;
            while (!q.empty() && prev_node[static_cast<std::size_t>(t)] == -1) {
                const int v = q.front();
                q.pop();
                const auto& row = arcs[static_cast<std::size_t>(v)];
                for (std::size_t i = 0; i < row.size(); ++i) {
                    const Arc& a = row[i];
                    if (a.cap > 0 && prev_node[static_cast<std::size_t>(a.to)] == -1) {
                        prev_node[static_cast<std::size_t>(a.to)] = v;
                        prev_arc[static_cast<std::size_t>(a.to)] = static_cast<int>(i);
                        q.push(a.to);
                    }
                }
            }
            if (prev_node[static_cast<std::size_t>(t)] == -1) break;
            for (int v = t; v != s; v = prev_node[static_cast<std::size_t>(v)]) {
                Arc& a = arcs[static_cast<std::size_t>(prev_node[static_cast<std::size_t>(v)])]
                             [static_cast<std::size_t>(prev_arc[static_cast<std::size_t>(v)])];
                a.cap -= 1;
                arcs[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
            }
            ++flow;
        }
        return flow;
    }
};

} // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    const long long complete_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (g.edge_count() == complete_edges) return n - 1;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            SplitNetwork net(g); // rebuilt per pair: caps are consumed by the flow
            best = std::min(best, net.max_flow(2 * s + 1, 2 * t, best));
            if (best == 0) return 0;
        }
    return best;
}

} // namespace hamres
