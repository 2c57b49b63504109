#pragma once

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"
#include "pursuit/graph_io.hpp"
#include "pursuit/rng.hpp"
#include "pursuit/walk.hpp"

namespace testutil {

using pursuit::DistanceMatrix;
using pursuit::Graph;
using pursuit::Walk;

inline std::string fixture_path(const std::string& name) {
    return std::string(PURSUIT_FIXTURE_DIR) + "/" + name + ".json";
}

inline Graph fixture(const std::string& name) {
    return pursuit::load_graph_file(fixture_path(name));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Floyd-Warshall, as an oracle independent of the BFS implementation.
inline std::vector<std::vector<long>> brute_distances(const Graph& g) {
    const int n = g.vertex_count();
    const long inf = 1L << 40;
    std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    return d;
}

// Exhaustive DFS over all simple shortest paths, no count-based pruning.
inline void brute_paths_rec(const Graph& g, const DistanceMatrix& dm, int t, Walk& w,
                            std::vector<Walk>& out) {
    int v = w.back();
    if (v == t) {
        out.push_back(w);
        return;
    }
    for (int z : g.neighbors(v)) {
        if (dm.at(z, t) == dm.at(v, t) - 1) {
            w.push_back(z);
            brute_paths_rec(g, dm, t, w, out);
            w.pop_back();
        }
    }
}

inline std::vector<Walk> brute_shortest_paths(const Graph& g, int s, int t) {
    DistanceMatrix dm = pursuit::all_pairs_distances(g);
    Walk w{s};
    std::vector<Walk> out;
    brute_paths_rec(g, dm, t, w, out);
    std::sort(out.begin(), out.end());
    return out;
}

// All walks of a fixed vertex count from s to t with no consecutive repeats,
// filtered by the delta-window definition afterwards. Exponential; only for
// tiny instances, as a completely unpruned oracle.
inline void brute_walks_rec(const Graph& g, int t, int length, Walk& w,
                            std::vector<Walk>& out) {
    if (static_cast<int>(w.size()) == length) {
        if (w.back() == t) out.push_back(w);
        return;
    }
    for (int z : g.neighbors(w.back())) {
        w.push_back(z);
        brute_walks_rec(g, t, length, w, out);
        w.pop_back();
    }
}

inline std::vector<Walk> brute_delta_optimal_walks(const Graph& g, int s, int t, int delta,
                                                   int length) {
    DistanceMatrix dm = pursuit::all_pairs_distances(g);
    Walk w{s};
    std::vector<Walk> all;
    brute_walks_rec(g, t, length, w, all);
    std::vector<Walk> out;
    for (const auto& cand : all) {
        bool ok = true;
        for (std::size_t i = 0; ok && i + delta < cand.size(); ++i) {
            ok = dm.at(cand[i], cand[i + delta]) == delta;
        }
        if (ok) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Chordality oracle: a graph is non-chordal iff some vertex subset induces a
// cycle on >= 4 vertices. 2^n scan, fine for n <= ~14.
inline bool brute_has_chordless_cycle(const Graph& g) {
    const int n = g.vertex_count();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 4) continue;
        bool cycle = true;
        int first = -1;
        for (int v = 0; v < n && cycle; ++v) {
            if (!(mask & (1u << v))) continue;
            if (first < 0) first = v;
            int deg = 0;
            for (int w : g.neighbors(v)) {
                if (mask & (1u << w)) ++deg;
            }
            cycle = deg == 2;
        }
        if (!cycle) continue;
        // Connectivity of the induced subgraph.
        unsigned seen = 1u << first;
        std::vector<int> stack{first};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if ((mask & (1u << w)) && !(seen & (1u << w))) {
                    seen |= 1u << w;
                    stack.push_back(w);
                }
            }
        }
        if (seen == mask) return true;
    }
    return false;
}

// Deterministic connected random graph, for property sweeps.
inline Graph random_connected_graph(pursuit::Rng& rng, int n, int percent_extra) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        g.add_edge(v, static_cast<int>(rng.below(v)));
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v) && rng.below(100) < static_cast<std::uint64_t>(percent_extra)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

inline Walk random_walk(pursuit::Rng& rng, const Graph& g, int start, int steps) {
    Walk w{start};
    for (int i = 0; i < steps; ++i) {
        const auto& nb = g.neighbors(w.back());
        if (nb.empty()) break;
        w.push_back(nb[rng.below(nb.size())]);
    }
    return w;
}

}  // namespace testutil
