#include "hamres/posa.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "hamres/combinatorics.hpp"
#include "hamres/errors.hpp"
#include "hamres/rng.hpp"

namespace hamres {

namespace {

bool expands(const Graph& g, const VertexSet& u, const Ratio& alpha) {
    const long long nbrs = static_cast<long long>(neighborhood(g, u).count());
    const long long size = static_cast<long long>(u.count());
    return nbrs * alpha.den >= alpha.num * size;
}

} // namespace

ExpanderVerdict is_expander(const Graph& g, const ExpanderParams& params, long long subset_budget) {
    if (params.k < 1) throw std::invalid_argument("expander k must be >= 1");
    if (params.alpha.num <= 0 || params.alpha.den <= 0)
        throw std::invalid_argument("expander alpha must be positive");
    const int n = g.vertex_count();
    const int k = std::min(params.k, n);
    long long total = 0;
    for (int s = 1; s <= k; ++s) total += binomial_saturating(n, s);
    if (total > subset_budget)
        throw ResourceLimitError("expander check needs " + std::to_string(total) +
                                 " subsets, budget " + std::to_string(subset_budget));
    for (int s = 1; s <= k; ++s) {
        std::optional<VertexSet> violator;
        for_each_combination(n, s, [&](const std::vector<int>& subset) {
            VertexSet u;
            for (int v : subset) u.set(static_cast<std::size_t>(v));
            if (!expands(g, u, params.alpha)) {
                violator = u;
                return false;
            }
            return true;
        });
        if (violator) return {false, violator};
    }
    return {true, std::nullopt};
}

int max_expander_k(const Graph& g, const Ratio& alpha, long long subset_budget) {
    const int n = g.vertex_count();
    long long spent = 0;
    for (int k = 1; k <= n; ++k) {
        const long long level = binomial_saturating(n, k);
        if (spent + level > subset_budget) return k - 1;
        spent += level;
        bool ok = true;
        for_each_combination(n, k, [&](const std::vector<int>& subset) {
            VertexSet u;
            for (int v : subset) u.set(static_cast<std::size_t>(v));
            if (!expands(g, u, alpha)) {
                ok = false;
                return false;
            }
            return true;
        });
        if (!ok) return k - 1;
    }
    return n;
}

bool is_booster(const Graph& g, int u, int v, int n_limit) {
    if (u == v) throw std::invalid_argument("booster endpoints must differ");
    if (g.has_edge(u, v)) throw std::invalid_argument("booster candidate is an existing edge");
    const Graph extended = g.with_edge(u, v);
    if (is_hamiltonian(extended, n_limit)) return true;
    return longest_path_length(extended, n_limit) > longest_path_length(g, n_limit);
}

EdgeSet enumerate_boosters(const Graph& g, int n_limit) {
    const int n = g.vertex_count();
    std::vector<Edge> found;
    const bool base_hamiltonian = is_hamiltonian(g, n_limit);
    const int base_length = base_hamiltonian ? 0 : longest_path_length(g, n_limit);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (base_hamiltonian) {
                // Adding edges preserves Hamiltonicity, so every non-edge boosts.
                found.push_back(Edge{u, v});
                continue;
            }
            const Graph extended = g.with_edge(u, v);
            if (is_hamiltonian(extended, n_limit) ||
                longest_path_length(extended, n_limit) > base_length)
                found.push_back(Edge{u, v});
        }
    return EdgeSet(std::move(found));
}

namespace {

struct RotationPath {
    std::vector<int> order;
    VertexSet members;
};

RotationPath greedy_path(const Graph& g, SplitMix64& rng) {
    const int n = g.vertex_count();
    RotationPath p;
    const int start = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    p.order.push_back(start);
    p.members.set(static_cast<std::size_t>(start));
    // Extend at the back, then at the front, picking random fresh neighbors.
    for (int side = 0; side < 2; ++side) {
        while (true) {
            const int tip = side == 0 ? p.order.back() : p.order.front();
            const VertexSet options = g.neighbors(tip) & ~p.members;
            if (options.none()) break;
            std::vector<int> fresh;
            for (int w = static_cast<int>(options._Find_first()); w < n;
                 w = static_cast<int>(options._Find_next(static_cast<std::size_t>(w))))
                fresh.push_back(w);
            const int pick = fresh[rng.next_below(fresh.size())];
            if (side == 0)
                p.order.push_back(pick);
            else
                p.order.insert(p.order.begin(), pick);
            p.members.set(static_cast<std::size_t>(pick));
        }
    }
    return p;
}

// Pósa rotation with the head fixed: endpoint t adjacent to order[i]
// (i <= len-3) yields a new path ending at order[i+1].
RotationPath rotate(const RotationPath& p, std::size_t i) {
    RotationPath out;
    out.members = p.members;
    out.order.assign(p.order.begin(), p.order.begin() + static_cast<std::ptrdiff_t>(i + 1));
    out.order.insert(out.order.end(), p.order.rbegin(),
                     p.order.rend() - static_cast<std::ptrdiff_t>(i + 1));
    return out;
}

enum class BfsOutcome { extended, cycle, stuck };

// Breadth-first search over the endpoints reachable by rotations, head
// fixed. Extension or cycle closure rewrites `path`.
BfsOutcome rotation_bfs(const Graph& g, RotationPath& path, std::vector<HamiltonWitness>& cycle_out,
                        SplitMix64& rng, long long& rotation_budget) {
    const int n = g.vertex_count();
    std::deque<RotationPath> queue;
    VertexSet seen_endpoints;
    queue.push_back(path);
    seen_endpoints.set(static_cast<std::size_t>(path.order.back()));
    while (!queue.empty() && rotation_budget > 0) {
        RotationPath current = std::move(queue.front());
        queue.pop_front();
        const int tip = current.order.back();
        const VertexSet fresh = g.neighbors(tip) & ~current.members;
        if (fresh.any()) {
            std::vector<int> options;
            for (int w = static_cast<int>(fresh._Find_first()); w < n;
                 w = static_cast<int>(fresh._Find_next(static_cast<std::size_t>(w))))
                options.push_back(w);
            const int pick = options[rng.next_below(options.size())];
            current.order.push_back(pick);
            current.members.set(static_cast<std::size_t>(pick));
            path = std::move(current);
            return BfsOutcome::extended;
        }
        if (static_cast<int>(current.order.size()) == n &&
            g.has_edge(current.order.back(), current.order.front())) {
            cycle_out.push_back({HamiltonWitness::Kind::cycle, current.order});
            return BfsOutcome::cycle;
        }
        --rotation_budget;
        for (std::size_t i = 0; i + 2 < current.order.size(); ++i) {
            if (!g.has_edge(current.order[i], tip)) continue;
            const int new_tip = current.order[i + 1];
            if (seen_endpoints.test(static_cast<std::size_t>(new_tip))) continue;
            seen_endpoints.set(static_cast<std::size_t>(new_tip));
            queue.push_back(rotate(current, i));
        }
    }
    return BfsOutcome::stuck;
}

} // namespace

std::optional<HamiltonWitness> posa_find_hamilton(const Graph& g, std::uint64_t seed,
                                                  int max_restarts) {
    const int n = g.vertex_count();
    if (n < 3 || g.min_degree() < 2 || !g.is_connected()) return std::nullopt;
    for (int restart = 0; restart < max_restarts; ++restart) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
        RotationPath path = greedy_path(g, rng);
        long long rotation_budget = static_cast<long long>(n) * n;
        std::vector<HamiltonWitness> cycles;
        bool stuck_once = false;
        while (rotation_budget > 0) {
            const BfsOutcome outcome = rotation_bfs(g, path, cycles, rng, rotation_budget);
            if (outcome == BfsOutcome::cycle) return cycles.back();
            if (outcome == BfsOutcome::extended) {
                stuck_once = false;
                continue;
            }
            if (stuck_once) break; // both orientations exhausted
            std::reverse(path.order.begin(), path.order.end());
            stuck_once = true;
        }
    }
    return std::nullopt;
}

std::optional<Graph> extract_sparse_expander(const Graph& g, const EdgeSet& h,
                                             const SparsificationParams& params,
                                             const ExpanderParams& target, int retries,
                                             long long subset_budget) {
    const Graph base = remove_edges(g, h);
    for (int attempt = 0; attempt < retries; ++attempt) {
        SparsificationParams draw = params;
        draw.seed = derive_seed(params.seed, static_cast<std::uint64_t>(attempt));
        Graph gamma = sample_capped_subgraph(base, draw);
        if (is_expander(gamma, target, subset_budget).is_expander) return gamma;
    }
    return std::nullopt;
}

std::optional<HamiltonWitness> booster_augment(const Graph& g, const EdgeSet& h,
                                               const Graph& gamma0, int max_steps, int n_limit,
                                               AugmentTrace* trace) {
    const Graph base = remove_edges(g, h);
    const int n = g.vertex_count();
    if (gamma0.vertex_count() != n) throw std::invalid_argument("gamma0 vertex count mismatch");
    for (const Edge& e : gamma0.edge_set())
        if (!base.has_edge(e.u, e.v))
            throw std::invalid_argument("gamma0 is not a subgraph of g \\ h");
    Graph gamma = gamma0;
    if (trace) *trace = AugmentTrace{};
    for (int step = 0; step <= max_steps; ++step) {
        if (auto cycle = find_hamilton_cycle(gamma, n_limit)) {
            if (trace) trace->found_cycle = true;
            return cycle;
        }
        if (step == max_steps) break;
        const int current_length = longest_path_length(gamma, n_limit);
        if (trace) trace->path_lengths.push_back(current_length);
        // Lexicographically first booster of gamma available in g \ h.
        bool added = false;
        for (int u = 0; u < n && !added; ++u)
            for (int v = u + 1; v < n && !added; ++v) {
                if (gamma.has_edge(u, v) || !base.has_edge(u, v)) continue;
                const Graph extended = gamma.with_edge(u, v);
                const bool boosts = is_hamiltonian(extended, ham_limit) ||
                                    longest_path_length(extended, n_limit) > current_length;
                if (boosts) {
                    gamma = extended;
                    added = true;
                    if (trace) ++trace->steps;
                }
            }
        if (!added) return std::nullopt;
    }
    return std::nullopt;
}

} // namespace hamres
