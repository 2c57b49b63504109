#pragma once

#include <string>

#include "pursuit/graph.hpp"

namespace pursuit {

// Accepts either the JSON form {"n":..,"edges":[[u,v],..],"labels":{..},"comment":".."}
// or the edge-list form (first line "n", then one "u v" line per edge).
// A top-level "manifest" key in the JSON form is tolerated and ignored.
Graph load_graph(const std::string& text);
Graph load_graph_file(const std::string& path);

// Canonical dumps: edges sorted with u < v, labels in index order.
// dump(load(dump(g))) is byte-identical to dump(g).
std::string dump_graph_json(const Graph& g);
// The edge-list form carries no labels or comment.
std::string dump_graph_edge_list(const Graph& g);

Graph make_path(int n);
Graph make_cycle(int n);
// Vertex (x,y) of an r x c grid is flattened as x*c + y.
Graph make_grid(int rows, int cols);
Graph make_complete(int n);

}  // namespace pursuit
