#include "hamres/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "hamres/errors.hpp"

namespace hamres {

Graph read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw ConfigError("edge list: missing 'n m' header");
    if (n < 0 || n > kMaxVertices) throw ConfigError("edge list: vertex count out of range");
    if (m < 0) throw ConfigError("edge list: negative edge count");
    Graph g(static_cast<int>(n));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw ConfigError("edge list: expected " + std::to_string(m) + " edges");
        if (u == v) throw ConfigError("edge list: self-loop at line " + std::to_string(i + 2));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ConfigError("edge list: label out of range at line " + std::to_string(i + 2));
        edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
    }
    EdgeSet set(edges);
    if (set.size() != edges.size()) throw ConfigError("edge list: duplicate edge");
    return Graph(static_cast<int>(n), set);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edge_set()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_edge_list(out, g);
    if (!out) throw IoError("write failed: " + path);
}

} // namespace hamres
