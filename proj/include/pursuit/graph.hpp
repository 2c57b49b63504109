#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <string>
#include <utility>
#include <vector>

#include "pursuit/errors.hpp"
#include "pursuit/rng.hpp"

namespace pursuit {

using Walk = std::vector<int>;

// Undirected simple graph on vertices 0..n-1. Self-loops are rejected:
// reflexivity is a pursuit-rule convention (an agent may stay where it is),
// not part of the stored edge set.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    void add_edge(int u, int v);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    bool has_vertex(int v) const { return v >= 0 && v < n_; }
    int degree(int v) const;
    // Sorted ascending.
    const std::vector<int>& neighbors(int v) const;
    // Unordered pairs (u < v), sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    void check_vertex(int v, const char* what) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    // Optional metadata carried by the file format.
    std::map<int, std::string> labels;
    std::string comment;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<bool> mat_;
};

// Exact BFS hop distances; kUnreachable marks disconnected pairs.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

    int size() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    int operator()(int u, int v) const { return at(u, v); }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
    // Largest finite distance; 0 for an edgeless or single-vertex graph.
    int diameter() const;
    bool connected() const;

private:
    int n_ = 0;
    std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// { u : d(center,u) <= radius }, sorted ascending. Never empty.
std::vector<int> disk(const Graph& g, const DistanceMatrix& dm, int center, int radius);

// Shortest-path counts toward one fixed target, for every vertex in its
// component. Counts that leave the 64-bit range are poisoned per vertex and
// only error when queried.
class PathCountTable {
public:
    PathCountTable(const Graph& g, const DistanceMatrix& dm, int target);

    int target() const { return target_; }
    // eta(u, target). Throws OverflowError if poisoned, Error if unreachable.
    std::int64_t count_from(int u) const;

private:
    int target_;
    std::vector<std::int64_t> counts_;  // -1 = overflowed, -2 = unreachable
};

// eta(u,v): number of distinct shortest u->v paths; eta(v,v) = 1.
std::int64_t count_shortest_paths(const Graph& g, const DistanceMatrix& dm, int u, int v);

// eta(u1u2,v): shortest u1->v paths whose first step is u2. May be 0.
// u1u2 must be an edge, except the reflexive terminal case u1 == u2 == v.
std::int64_t count_shortest_paths_via_edge(const Graph& g, const DistanceMatrix& dm,
                                           int u1, int u2, int v);

// First step of a uniformly random shortest path from `from` to the table's
// target; `from` itself when already there.
int sample_pursuit_step(const Graph& g, const DistanceMatrix& dm,
                        const PathCountTable& counts, int from, Rng& rng);
int sample_pursuit_step(const Graph& g, const DistanceMatrix& dm,
                        int from, int target, Rng& rng);

// Caches one PathCountTable per target, for loops that sample many steps or
// whole paths against a small set of targets.
class ShortestPathSampler {
public:
    ShortestPathSampler(const Graph& g, const DistanceMatrix& dm) : g_(g), dm_(dm) {}

    int step(int from, int target, Rng& rng);
    // A uniformly random shortest path, drawn step by step.
    Walk sample_path(int from, int to, Rng& rng);

private:
    const PathCountTable& table(int target);

    const Graph& g_;
    const DistanceMatrix& dm_;
    std::unordered_map<int, PathCountTable> tables_;
};

// All shortest u->v paths in lexicographic order. BudgetError past `limit`.
std::vector<Walk> enumerate_shortest_paths(const Graph& g, const DistanceMatrix& dm,
                                           int u, int v, std::size_t limit);

}  // namespace pursuit
