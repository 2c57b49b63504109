#pragma once

#include <utility>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

enum class ProductKind { kCartesian, kStrong };

inline constexpr std::size_t kDefaultProductCap = 2500;

// A product graph keeps its factors so walks can be projected and scored.
// Vertex (x,y) flattens to x * n2 + y.
struct ProductGraph {
    Graph graph;
    Graph factor1;
    Graph factor2;
    ProductKind kind = ProductKind::kCartesian;

    int n1() const { return factor1.vertex_count(); }
    int n2() const { return factor2.vertex_count(); }
    int flat(int x, int y) const { return x * n2() + y; }
    std::pair<int, int> coords(int v) const { return {v / n2(), v % n2()}; }
};

// Edges join vertices that agree in one coordinate and are adjacent in the
// other. The induced metric is the taxicab sum of factor distances.
ProductGraph cartesian_product(const Graph& g1, const Graph& g2,
                               std::size_t max_vertices = kDefaultProductCap);

// Additionally joins vertices adjacent in both coordinates; the induced
// metric is the max of factor distances.
ProductGraph strong_product(const Graph& g1, const Graph& g2,
                            std::size_t max_vertices = kDefaultProductCap);

// Coordinate-wise projection of a product walk. A projected step may stall,
// so the projection lives in this reflexive representation instead of a
// stored Walk: vertices may repeat consecutively and stationary[k] records
// whether step k->k+1 stalled.
struct ProjectedWalk {
    std::vector<int> vertices;
    std::vector<bool> stationary;
};

ProjectedWalk project_walk(const ProductGraph& pg, const Walk& w, int factor);

// Per interior vertex of a strong-product walk: how much the vertex advances
// each projection toward the next vertex, relative to its predecessor.
// Values always land in {-1, 0, 1}.
struct ScorePair {
    int x = 0;
    int y = 0;

    bool operator==(const ScorePair&) const = default;
};

std::vector<ScorePair> xy_scores(const ProductGraph& pg, const Walk& w);

}  // namespace pursuit
