#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hamres/graph.hpp"

namespace hamres {

// Exact desk-scale oracles. The subset-DP solvers are exponential and
// guarded by a vertex limit; exceeding it raises ResourceLimitError rather
// than degrading to a heuristic.

inline constexpr int kDefaultHamiltonLimit = 28;
// The longest-path DP walks all 2^n subsets (the cycle DP only those
// containing vertex 0), so its default ceiling is lower.
inline constexpr int kDefaultLongestPathLimit = 24;

struct HamiltonWitness {
    enum class Kind { cycle, path };
    Kind kind = Kind::cycle;
    std::vector<int> order;
};

// True iff `w.order` visits every vertex exactly once and consecutive pairs
// (cyclically for cycles) are edges of g.
bool validate_witness(const Graph& g, const HamiltonWitness& w);

std::optional<HamiltonWitness> find_hamilton_cycle(const Graph& g,
                                                   int n_limit = kDefaultHamiltonLimit);

inline bool is_hamiltonian(const Graph& g, int n_limit = kDefaultHamiltonLimit) {
    return find_hamilton_cycle(g, n_limit).has_value();
}

// Spanning path with endpoints u, v; u != v.
std::optional<HamiltonWitness> hamilton_path_between(const Graph& g, int u, int v,
                                                     int n_limit = kDefaultHamiltonLimit);

struct HamiltonConnectivity {
    bool connected = false;
    std::optional<std::pair<int, int>> failing_pair;
};

HamiltonConnectivity is_hamilton_connected(const Graph& g, int n_limit = kDefaultHamiltonLimit);

// Maximum number of edges over all simple paths.
int longest_path_length(const Graph& g, int n_limit = kDefaultLongestPathLimit);

// Maximum matching on general graphs (blossom contraction); polynomial.
int max_matching_size(const Graph& g);
// mate[v] = matched partner or -1.
std::vector<int> maximum_matching(const Graph& g);

inline bool has_perfect_matching(const Graph& g) {
    return g.vertex_count() % 2 == 0 && 2 * max_matching_size(g) == g.vertex_count();
}

int independence_number(const Graph& g);
VertexSet maximum_independent_set(const Graph& g);

// Minimum number of vertices whose removal disconnects g or leaves a single
// vertex; n-1 for complete graphs by convention.
int vertex_connectivity(const Graph& g);

} // namespace hamres
