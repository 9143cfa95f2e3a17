#include "hamres/random.hpp"

#include <cmath>
#include <stdexcept>

#include "hamres/rng.hpp"

namespace hamres {

Graph sample_gnp(const GnpParams& params) {
    if (params.p < 0.0 || params.p > 1.0) throw std::invalid_argument("p outside [0,1]");
    SplitMix64 rng(params.seed);
    std::vector<Edge> edges;
    for (int u = 0; u < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v)
            if (rng.next_double() < params.p) edges.push_back(Edge{u, v});
    return Graph(params.n, EdgeSet(std::move(edges)));
}

Graph sample_capped_subgraph(const Graph& g, const SparsificationParams& params) {
    if (params.d0 < 1) throw std::invalid_argument("d0 must be >= 1");
    const int n = g.vertex_count();
    std::vector<Edge> kept;
    for (int v = 0; v < n; ++v) {
        const VertexSet& nb = g.neighbors(v);
        std::vector<int> candidates;
        for (int w = static_cast<int>(nb._Find_first()); w < n;
             w = static_cast<int>(nb._Find_next(static_cast<std::size_t>(w))))
            candidates.push_back(w);
        if (static_cast<int>(candidates.size()) <= params.d0) {
            for (int w : candidates) kept.push_back(make_edge(v, w));
            continue;
        }
        // Partial Fisher-Yates: the first d0 slots are a uniform subset.
        SplitMix64 rng(derive_seed(params.seed, static_cast<std::uint64_t>(v)));
        for (int i = 0; i < params.d0; ++i) {
            const std::size_t j =
                static_cast<std::size_t>(i) +
                rng.next_below(candidates.size() - static_cast<std::size_t>(i));
            std::swap(candidates[static_cast<std::size_t>(i)], candidates[j]);
            kept.push_back(make_edge(v, candidates[static_cast<std::size_t>(i)]));
        }
    }
    return Graph(n, EdgeSet(std::move(kept)));
}

int default_d0(int n, double p, double coeff) {
    const double np = static_cast<double>(n) * p;
    return std::max(3, static_cast<int>(std::ceil(coeff * np)));
}

} // namespace hamres
