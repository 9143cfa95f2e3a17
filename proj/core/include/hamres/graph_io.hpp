#pragma once

#include <iosfwd>
#include <string>

#include "hamres/graph.hpp"

namespace hamres {

// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n. The reader rejects duplicates, self-loops, out-of-range
// labels, and count mismatches.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

} // namespace hamres
