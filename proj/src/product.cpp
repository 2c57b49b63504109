#include "pursuit/product.hpp"

#include "pursuit/walk.hpp"

namespace pursuit {

namespace {

ProductGraph build_product(const Graph& g1, const Graph& g2, ProductKind kind,
                           std::size_t max_vertices) {
    if (g1.vertex_count() < 1 || g2.vertex_count() < 1) {
        throw Error("product factors must be non-empty");
    }
    const std::size_t total =
        static_cast<std::size_t>(g1.vertex_count()) * static_cast<std::size_t>(g2.vertex_count());
    if (total > max_vertices) {
        throw BudgetError("product would have " + std::to_string(total) +
                          " vertices, cap is " + std::to_string(max_vertices));
    }
    ProductGraph pg;
    pg.factor1 = g1;
    pg.factor2 = g2;
    pg.kind = kind;
    pg.graph = Graph(static_cast<int>(total));
    const int n2 = g2.vertex_count();
    for (int x = 0; x < g1.vertex_count(); ++x) {
        for (int y = 0; y < n2; ++y) {
            const int a = x * n2 + y;
            for (int y2 : g2.neighbors(y)) {
                if (y2 > y) pg.graph.add_edge(a, x * n2 + y2);
            }
            for (int x2 : g1.neighbors(x)) {
                if (x2 > x) pg.graph.add_edge(a, x2 * n2 + y);
            }
            if (kind == ProductKind::kStrong) {
                for (int x2 : g1.neighbors(x)) {
                    for (int y2 : g2.neighbors(y)) {
                        const int b = x2 * n2 + y2;
                        if (b > a) pg.graph.add_edge(a, b);
                    }
                }
            }
        }
    }
    return pg;
}

}  // namespace

ProductGraph cartesian_product(const Graph& g1, const Graph& g2, std::size_t max_vertices) {
    return build_product(g1, g2, ProductKind::kCartesian, max_vertices);
}

ProductGraph strong_product(const Graph& g1, const Graph& g2, std::size_t max_vertices) {
    return build_product(g1, g2, ProductKind::kStrong, max_vertices);
}

ProjectedWalk project_walk(const ProductGraph& pg, const Walk& w, int factor) {
    if (factor != 1 && factor != 2) throw Error("factor must be 1 or 2");
    if (!validate_walk(pg.graph, w)) throw Error("walk is not valid in the product graph");
    ProjectedWalk out;
    out.vertices.reserve(w.size());
    for (int v : w) {
        auto [x, y] = pg.coords(v);
        out.vertices.push_back(factor == 1 ? x : y);
    }
    for (std::size_t i = 0; i + 1 < out.vertices.size(); ++i) {
        out.stationary.push_back(out.vertices[i] == out.vertices[i + 1]);
    }
    return out;
}

std::vector<ScorePair> xy_scores(const ProductGraph& pg, const Walk& w) {
    if (pg.kind != ProductKind::kStrong) throw Error("scores are defined on strong products");
    if (!validate_walk(pg.graph, w)) throw Error("walk is not valid in the product graph");
    if (w.size() < 3) throw Error("scores need a walk of at least three vertices");
    const DistanceMatrix d1 = all_pairs_distances(pg.factor1);
    const DistanceMatrix d2 = all_pairs_distances(pg.factor2);
    std::vector<ScorePair> out;
    out.reserve(w.size() - 2);
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        auto [px, py] = pg.coords(w[i - 1]);
        auto [cx, cy] = pg.coords(w[i]);
        auto [nx, ny] = pg.coords(w[i + 1]);
        ScorePair s;
        s.x = d1.at(px, nx) - d1.at(cx, nx);
        s.y = d2.at(py, ny) - d2.at(cy, ny);
        if (s.x < -1 || s.x > 1 || s.y < -1 || s.y > 1) {
            throw Error("score outside {-1,0,1} (internal error)");
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace pursuit
