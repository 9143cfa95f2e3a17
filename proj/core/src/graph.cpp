#include "hamres/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hamres {

Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop " + std::to_string(u));
    if (u > v) std::swap(u, v);
    return Edge{u, v};
}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (Edge& e : edges_) e = make_edge(e.u, e.v);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

EdgeSet EdgeSet::from_pairs(std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> es;
    es.reserve(pairs.size());
    for (const auto& [u, v] : pairs) es.push_back(make_edge(u, v));
    return EdgeSet(std::move(es));
}

bool EdgeSet::contains(int u, int v) const {
    const Edge e = make_edge(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, " +
                                    std::to_string(kMaxVertices) + "]");
}

Graph::Graph(int n, const EdgeSet& edges) : Graph(n) {
    for (const Edge& e : edges) {
        check_vertex(e.u);
        check_vertex(e.v);
        add_edge_unchecked(e.u, e.v);
    }
}

Graph Graph::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> es;
    es.reserve(pairs.size());
    for (const auto& [u, v] : pairs) es.push_back(make_edge(u, v));
    return Graph(n, EdgeSet(std::move(es)));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(n_));
}

void Graph::add_edge_unchecked(int u, int v) {
    auto& au = adj_[static_cast<std::size_t>(u)];
    if (au.test(static_cast<std::size_t>(v))) return;
    au.set(static_cast<std::size_t>(v));
    adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = kMaxVertices;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop");
    Graph out = *this;
    out.add_edge_unchecked(u, v);
    return out;
}

EdgeSet Graph::edge_set() const {
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        const auto& row = adj_[static_cast<std::size_t>(u)];
        for (int v = static_cast<int>(row._Find_next(static_cast<std::size_t>(u))); v < n_;
             v = static_cast<int>(row._Find_next(static_cast<std::size_t>(v))))
            es.push_back(Edge{u, v});
    }
    return EdgeSet(std::move(es));
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    VertexSet seen;
    VertexSet frontier;
    frontier.set(0);
    seen.set(0);
    while (frontier.any()) {
        VertexSet next;
        for (int v = static_cast<int>(frontier._Find_first()); v < n_;
             v = static_cast<int>(frontier._Find_next(static_cast<std::size_t>(v))))
            next |= adj_[static_cast<std::size_t>(v)];
        frontier = next & ~seen;
        seen |= frontier;
    }
    return static_cast<int>(seen.count()) == n_;
}

namespace {

void check_subset(const Graph& g, const VertexSet& u, const char* name) {
    for (int v = static_cast<int>(u._Find_first()); v < kMaxVertices;
         v = static_cast<int>(u._Find_next(static_cast<std::size_t>(v))))
        if (v >= g.vertex_count())
            throw std::invalid_argument(std::string(name) + " contains vertex outside graph");
}

} // namespace

VertexSet neighborhood(const Graph& g, const VertexSet& u) {
    check_subset(g, u, "U");
    VertexSet out;
    const int n = g.vertex_count();
    for (int v = static_cast<int>(u._Find_first()); v < n;
         v = static_cast<int>(u._Find_next(static_cast<std::size_t>(v))))
        out |= g.neighbors(v);
    return out & ~u;
}

long long edges_between(const Graph& g, const VertexSet& u, const VertexSet& w) {
    if ((u & w).any()) throw std::invalid_argument("edges_between requires disjoint sets");
    check_subset(g, u, "U");
    check_subset(g, w, "W");
    long long count = 0;
    const int n = g.vertex_count();
    for (int v = static_cast<int>(u._Find_first()); v < n;
         v = static_cast<int>(u._Find_next(static_cast<std::size_t>(v))))
        count += static_cast<long long>((g.neighbors(v) & w).count());
    return count;
}

long long edges_within(const Graph& g, const VertexSet& u) {
    check_subset(g, u, "U");
    long long twice = 0;
    const int n = g.vertex_count();
    for (int v = static_cast<int>(u._Find_first()); v < n;
         v = static_cast<int>(u._Find_next(static_cast<std::size_t>(v))))
        twice += static_cast<long long>((g.neighbors(v) & u).count());
    return twice / 2;
}

Graph remove_edges(const Graph& g, const EdgeSet& h) {
    std::vector<Edge> kept;
    kept.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const Edge& e : h)
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("removed edge not present in graph");
    for (const Edge& e : g.edge_set())
        if (!h.contains(e.u, e.v)) kept.push_back(e);
    return Graph(g.vertex_count(), EdgeSet(std::move(kept)));
}

VertexSet all_vertices(const Graph& g) {
    VertexSet s;
    for (int v = 0; v < g.vertex_count(); ++v) s.set(static_cast<std::size_t>(v));
    return s;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep, std::vector<int>* old_labels) {
    check_subset(g, keep, "keep");
    std::vector<int> labels;
    std::vector<int> to_new(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (keep.test(static_cast<std::size_t>(v))) {
            to_new[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
            labels.push_back(v);
        }
    std::vector<Edge> es;
    for (const Edge& e : g.edge_set())
        if (keep.test(static_cast<std::size_t>(e.u)) && keep.test(static_cast<std::size_t>(e.v)))
            es.push_back(Edge{to_new[static_cast<std::size_t>(e.u)], to_new[static_cast<std::size_t>(e.v)]});
    if (old_labels) *old_labels = labels;
    return Graph(static_cast<int>(labels.size()), EdgeSet(std::move(es)));
}

} // namespace hamres
