#include "hamres/exact.hpp"

namespace hamres {

namespace {

struct MisSolver {
    const Graph& g;
    int n;
    int best_size = 0;
    VertexSet best_set;

    explicit MisSolver(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    void search(VertexSet chosen, int chosen_size, VertexSet cand) {
        while (true) {
            const int cand_size = static_cast<int>(cand.count());
            if (chosen_size + cand_size <= best_size) return;
            if (cand.none()) break;
            // Degree-0/1 candidates can be taken greedily without losing
            // optimality; otherwise branch on a max-degree candidate.
            int pick = -1, pick_deg = -1;
            bool reduced = false;
            for (int v = static_cast<int>(cand._Find_first()); v < n;
                 v = static_cast<int>(cand._Find_next(static_cast<std::size_t>(v)))) {
                const int d = static_cast<int>((g.neighbors(v) & cand).count());
                if (d <= 1) {
                    chosen.set(static_cast<std::size_t>(v));
                    ++chosen_size;
                    cand.reset(static_cast<std::size_t>(v));
                    cand &= ~g.neighbors(v);
                    reduced = true;
                    break;
                }
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
            if (reduced) continue;
            // Include pick.
            VertexSet with = chosen;
            with.set(static_cast<std::size_t>(pick));
            search(with, chosen_size + 1, cand & ~g.neighbors(pick) & ~vertex_bit(pick));
            // Exclude pick.
            cand.reset(static_cast<std::size_t>(pick));
        }
        if (chosen_size > best_size) {
            best_size = chosen_size;
            best_set = chosen;
        }
    }

    static VertexSet vertex_bit(int v) {
        VertexSet s;
        s.set(static_cast<std::size_t>(v));
        return s;
    }
};

} // namespace

VertexSet maximum_independent_set(const Graph& g) {
    MisSolver solver(g);
    solver.search(VertexSet{}, 0, all_vertices(g));
    return solver.best_set;
}

int independence_number(const Graph& g) {
    return static_cast<int>(maximum_independent_set(g).count());
}

} // namespace hamres
