#pragma once

#include <cstdint>

#include "hamres/graph.hpp"

namespace hamres {

struct GnpParams {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

struct SparsificationParams {
    int d0 = 1; // per-vertex retained-edge cap, >= 1
    std::uint64_t seed = 0;
};

// G(n,p): each of the C(n,2) pairs independently with probability p.
// Deterministic given the seed. One uniform variate is drawn per pair in a
// fixed order, so for a fixed seed the edge set grows monotonically in p
// (coupled sampling).
Graph sample_gnp(const GnpParams& params);

// Per-vertex capped random subgraph: vertex v keeps all incident edges if
// d(v) <= d0, otherwise a uniformly random d0-subset; the result is the
// union over all vertices. Guarantees min degree >= min(delta(G), d0) and
// at most d0*n edges.
Graph sample_capped_subgraph(const Graph& g, const SparsificationParams& params);

// Desk-scale surrogate for a degree cap proportional to the mean degree:
// max(3, ceil(coeff * n * p)).
int default_d0(int n, double p, double coeff = 0.1);

} // namespace hamres
