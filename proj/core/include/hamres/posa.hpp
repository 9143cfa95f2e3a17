#pragma once

#include <cstdint>
#include <optional>

#include "hamres/exact.hpp"
#include "hamres/graph.hpp"
#include "hamres/random.hpp"

namespace hamres {

inline constexpr long long kDefaultSubsetBudget = 20'000'000;

// Expansion factor alpha as an exact rational; comparisons never round.
struct Ratio {
    long long num = 1;
    long long den = 1;
};

struct ExpanderParams {
    int k = 1;
    Ratio alpha{2, 1};
};

struct ExpanderVerdict {
    bool is_expander = false;
    std::optional<VertexSet> violator; // smallest, lexicographically first
};

// Checks |N(U)| >= alpha|U| for every nonempty U with |U| <= k, by exact
// enumeration. Throws ResourceLimitError if C(n,1)+...+C(n,k) exceeds the
// subset budget.
ExpanderVerdict is_expander(const Graph& g, const ExpanderParams& params,
                            long long subset_budget = kDefaultSubsetBudget);

// Largest k for which is_expander holds; stops early (returning the largest
// fully verified k) once the budget is exhausted.
int max_expander_k(const Graph& g, const Ratio& alpha,
                   long long subset_budget = kDefaultSubsetBudget);

// A non-edge {u,v} is a booster if adding it makes the graph Hamiltonian or
// strictly lengthens its longest path. For a graph that is already
// Hamiltonian every non-edge qualifies.
bool is_booster(const Graph& g, int u, int v, int n_limit = kDefaultLongestPathLimit);

EdgeSet enumerate_boosters(const Graph& g, int n_limit = kDefaultLongestPathLimit);

// Rotation-extension heuristic: greedy start, breadth-first rotation over
// unexplored endpoints, restart on stagnation. Incomplete (may miss a cycle
// that exists) but deterministic given the seed.
std::optional<HamiltonWitness> posa_find_hamilton(const Graph& g, std::uint64_t seed,
                                                  int max_restarts = 50);

// Draws capped random subgraphs of g \ h until one verifies as a
// (target.k, target.alpha)-expander; at most `retries` draws.
std::optional<Graph> extract_sparse_expander(const Graph& g, const EdgeSet& h,
                                             const SparsificationParams& params,
                                             const ExpanderParams& target, int retries,
                                             long long subset_budget = kDefaultSubsetBudget);

struct AugmentTrace {
    std::vector<int> path_lengths; // longest-path length before each step
    int steps = 0;
    bool found_cycle = false;
};

// Repeatedly adds to gamma0 the lexicographically first booster available in
// g \ h until the graph is Hamiltonian, no such booster exists, or max_steps
// augmentations happened. On success the returned cycle lives in g \ h.
std::optional<HamiltonWitness> booster_augment(const Graph& g, const EdgeSet& h,
                                               const Graph& gamma0, int max_steps,
                                               int n_limit = kDefaultLongestPathLimit,
                                               AugmentTrace* trace = nullptr);

} // namespace hamres
