#include "pursuit/graph.hpp"

#include <algorithm>
#include <deque>

namespace pursuit {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw Error("vertex count must be non-negative");
    mat_.assign(static_cast<std::size_t>(n) * n, false);
}

void Graph::check_vertex(int v, const char* what) const {
    if (!has_vertex(v)) {
        throw Error(std::string(what) + " " + std::to_string(v) +
                    " out of range [0," + std::to_string(n_) + ")");
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, "edge endpoint");
    check_vertex(v, "edge endpoint");
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u) + " (reflexivity is implicit)");
    if (has_edge(u, v)) {
        throw Error("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    mat_[static_cast<std::size_t>(u) * n_ + v] = true;
    mat_[static_cast<std::size_t>(v) * n_ + u] = true;
    auto& au = adj_[u];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    std::pair<int, int> e{std::min(u, v), std::max(u, v)};
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    return mat_[static_cast<std::size_t>(u) * n_ + v];
}

int Graph::degree(int v) const {
    check_vertex(v, "vertex");
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v, "vertex");
    return adj_[v];
}

int DistanceMatrix::diameter() const {
    int best = 0;
    for (int d : d_) best = std::max(best, d);
    return best;
}

bool DistanceMatrix::connected() const {
    if (n_ == 0) return true;
    for (int v = 0; v < n_; ++v) {
        if (at(0, v) == kUnreachable) return false;
    }
    return true;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> d(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        int* row = d.data() + static_cast<std::size_t>(s) * n;
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (row[w] == DistanceMatrix::kUnreachable) {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return DistanceMatrix(n, std::move(d));
}

std::vector<int> disk(const Graph& g, const DistanceMatrix& dm, int center, int radius) {
    g.check_vertex(center, "disk center");
    if (radius < 0) throw Error("disk radius must be non-negative");
    std::vector<int> members;
    for (int u = 0; u < g.vertex_count(); ++u) {
        int d = dm.at(center, u);
        if (d != DistanceMatrix::kUnreachable && d <= radius) members.push_back(u);
    }
    return members;
}

PathCountTable::PathCountTable(const Graph& g, const DistanceMatrix& dm, int target)
    : target_(target) {
    g.check_vertex(target, "target");
    const int n = g.vertex_count();
    counts_.assign(n, -2);
    std::vector<int> order;
    order.reserve(n);
    for (int v = 0; v < n; ++v) {
        if (dm.reachable(v, target)) order.push_back(v);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = dm.at(a, target), db = dm.at(b, target);
        return da != db ? da < db : a < b;
    });
    for (int v : order) {
        if (v == target) {
            counts_[v] = 1;
            continue;
        }
        std::int64_t total = 0;
        bool poisoned = false;
        const int dv = dm.at(v, target);
        for (int w : g.neighbors(v)) {
            if (dm.at(w, target) != dv - 1) continue;
            std::int64_t c = counts_[w];
            if (c < 0 || __builtin_add_overflow(total, c, &total)) {
                poisoned = true;
                break;
            }
        }
        counts_[v] = poisoned ? -1 : total;
    }
}

std::int64_t PathCountTable::count_from(int u) const {
    if (u < 0 || u >= static_cast<int>(counts_.size())) throw Error("vertex out of range");
    std::int64_t c = counts_[u];
    if (c == -2) {
        throw Error("vertices " + std::to_string(u) + " and " + std::to_string(target_) +
                    " are not connected");
    }
    if (c == -1) throw OverflowError("shortest-path count overflows 64 bits");
    return c;
}

std::int64_t count_shortest_paths(const Graph& g, const DistanceMatrix& dm, int u, int v) {
    g.check_vertex(u, "vertex");
    PathCountTable table(g, dm, v);
    return table.count_from(u);
}

std::int64_t count_shortest_paths_via_edge(const Graph& g, const DistanceMatrix& dm,
                                           int u1, int u2, int v) {
    g.check_vertex(u1, "vertex");
    g.check_vertex(u2, "vertex");
    g.check_vertex(v, "vertex");
    if (u1 == u2) {
        // Reflexive terminal step: the trivial path from v to v.
        if (u1 != v) throw Error("u1 == u2 is only allowed at the target");
        return 1;
    }
    if (!g.has_edge(u1, u2)) {
        throw Error("(" + std::to_string(u1) + "," + std::to_string(u2) + ") is not an edge");
    }
    if (!dm.reachable(u1, v)) {
        throw Error("vertices " + std::to_string(u1) + " and " + std::to_string(v) +
                    " are not connected");
    }
    if (dm.at(u2, v) != dm.at(u1, v) - 1) return 0;
    return count_shortest_paths(g, dm, u2, v);
}

int sample_pursuit_step(const Graph& g, const DistanceMatrix& dm,
                        const PathCountTable& counts, int from, Rng& rng) {
    const int target = counts.target();
    if (from == target) return from;
    const std::int64_t total = counts.count_from(from);
    std::uint64_t r = rng.below(static_cast<std::uint64_t>(total));
    const int df = dm.at(from, target);
    std::uint64_t acc = 0;
    for (int w : g.neighbors(from)) {
        if (dm.at(w, target) != df - 1) continue;
        acc += static_cast<std::uint64_t>(counts.count_from(w));
        if (r < acc) return w;
    }
    throw Error("shortest-path counts are inconsistent");  // unreachable
}

int sample_pursuit_step(const Graph& g, const DistanceMatrix& dm,
                        int from, int target, Rng& rng) {
    g.check_vertex(from, "vertex");
    if (from == target) {
        g.check_vertex(target, "target");
        return from;
    }
    PathCountTable table(g, dm, target);
    return sample_pursuit_step(g, dm, table, from, rng);
}

const PathCountTable& ShortestPathSampler::table(int target) {
    auto it = tables_.find(target);
    if (it == tables_.end()) {
        it = tables_.emplace(target, PathCountTable(g_, dm_, target)).first;
    }
    return it->second;
}

int ShortestPathSampler::step(int from, int target, Rng& rng) {
    if (from == target) return from;
    return sample_pursuit_step(g_, dm_, table(target), from, rng);
}

Walk ShortestPathSampler::sample_path(int from, int to, Rng& rng) {
    g_.check_vertex(from, "vertex");
    g_.check_vertex(to, "vertex");
    Walk path{from};
    const PathCountTable& counts = table(to);
    int cur = from;
    while (cur != to) {
        cur = sample_pursuit_step(g_, dm_, counts, cur, rng);
        path.push_back(cur);
    }
    return path;
}

namespace {

void enumerate_rec(const Graph& g, const DistanceMatrix& dm, int v, int target,
                   std::size_t limit, Walk& walk, std::vector<Walk>& out) {
    if (v == target) {
        if (out.size() >= limit) {
            throw BudgetError("more than " + std::to_string(limit) + " shortest paths");
        }
        out.push_back(walk);
        return;
    }
    const int dv = dm.at(v, target);
    for (int w : g.neighbors(v)) {
        if (dm.at(w, target) != dv - 1) continue;
        walk.push_back(w);
        enumerate_rec(g, dm, w, target, limit, walk, out);
        walk.pop_back();
    }
}

}  // namespace

std::vector<Walk> enumerate_shortest_paths(const Graph& g, const DistanceMatrix& dm,
                                           int u, int v, std::size_t limit) {
    g.check_vertex(u, "vertex");
    g.check_vertex(v, "vertex");
    if (!dm.reachable(u, v)) {
        throw Error("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                    " are not connected");
    }
    std::vector<Walk> out;
    Walk walk{u};
    enumerate_rec(g, dm, u, v, limit, walk, out);
    return out;
}

}  // namespace pursuit
