#pragma once

#include <bitset>
#include <compare>
#include <initializer_list>
#include <utility>
#include <vector>

namespace hamres {

// Fixed bitset width; raise HAMRES_MAX_VERTICES at configure time if needed.
#ifndef HAMRES_MAX_VERTICES
#define HAMRES_MAX_VERTICES 512
#endif
inline constexpr int kMaxVertices = HAMRES_MAX_VERTICES;

using VertexSet = std::bitset<kMaxVertices>;

inline VertexSet vertex_set(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.set(static_cast<std::size_t>(v));
    return s;
}

// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

Edge make_edge(int u, int v); // normalizes, rejects self-loops

// Canonically sorted, deduplicated list of edges. Doubles as the removed
// subgraph H in resilience computations.
class EdgeSet {
  public:
    EdgeSet() = default;
    explicit EdgeSet(std::vector<Edge> edges);
    static EdgeSet from_pairs(std::initializer_list<std::pair<int, int>> pairs);

    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    bool contains(int u, int v) const;

    const std::vector<Edge>& edges() const { return edges_; }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }

    bool operator==(const EdgeSet&) const = default;

  private:
    std::vector<Edge> edges_;
};

// Undirected simple graph on labeled vertices 0..n-1 with per-vertex
// adjacency bitsets. Immutable after construction; "mutators" return copies.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const EdgeSet& edges);
    static Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].count()); }

    int min_degree() const; // 0 for the empty graph
    int max_degree() const;

    Graph with_edge(int u, int v) const;
    EdgeSet edge_set() const;
    bool is_connected() const; // true for n <= 1

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

  private:
    void add_edge_unchecked(int u, int v);
    void check_vertex(int v) const;

    int n_ = 0;
    long long m_ = 0;
    std::vector<VertexSet> adj_;
};

// External neighborhood N_G(U): vertices outside U adjacent to some u in U.
VertexSet neighborhood(const Graph& g, const VertexSet& u);

// Number of edges with one endpoint in U and one in W; U and W must be disjoint.
long long edges_between(const Graph& g, const VertexSet& u, const VertexSet& w);

// Number of edges spanned by U.
long long edges_within(const Graph& g, const VertexSet& u);

// G \ H; throws std::invalid_argument unless H is a subset of E(G).
Graph remove_edges(const Graph& g, const EdgeSet& h);

inline int min_degree(const Graph& g) { return g.min_degree(); }
inline int max_degree(const Graph& g) { return g.max_degree(); }

VertexSet all_vertices(const Graph& g);

// Induced subgraph on the vertices of `keep`, relabeled to 0..|keep|-1 in
// ascending label order; `old_labels[new] = old`.
Graph induced_subgraph(const Graph& g, const VertexSet& keep, std::vector<int>* old_labels = nullptr);

} // namespace hamres
