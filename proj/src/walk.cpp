#include "pursuit/walk.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace pursuit {

bool validate_walk(const Graph& g, const Walk& w) {
    if (w.empty()) throw Error("walk must be non-empty");
    for (int v : w) g.check_vertex(v, "walk vertex");
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (!g.has_edge(w[i], w[i + 1])) return false;
    }
    return true;
}

bool is_delta_optimal(const Graph& g, const DistanceMatrix& dm, const Walk& w, int delta) {
    if (delta < 1) throw Error("delta must be at least 1");
    for (int v : w) g.check_vertex(v, "walk vertex");
    for (std::size_t i = 0; i + delta < w.size(); ++i) {
        if (dm.at(w[i], w[i + delta]) != delta) return false;
    }
    return true;
}

std::vector<DiscrepancyPair> discrepancy_pairs(const Graph& g, const DistanceMatrix& dm,
                                               const Walk& w) {
    for (int v : w) g.check_vertex(v, "walk vertex");
    const int n = static_cast<int>(w.size());
    int best = -1;
    for (int gap = 2; gap < n && best < 0; ++gap) {
        for (int i = 0; i + gap < n; ++i) {
            if (gap > dm.at(w[i], w[i + gap])) {
                best = gap;
                break;
            }
        }
    }
    std::vector<DiscrepancyPair> out;
    if (best < 0) return out;
    for (int i = 0; i + best < n; ++i) {
        int dist = dm.at(w[i], w[i + best]);
        if (best > dist) out.push_back({i, i + best, best, dist});
    }
    return out;
}

namespace {

// Collapse consecutive repeats. The graph is reflexive for pursuit purposes,
// so a walk may dwell on a vertex; the canonical stored state drops the
// dwell. This is how a replacement whose seam joins two occurrences of the
// same vertex shortens a walk.
Walk compress(const Walk& w) {
    Walk out;
    out.reserve(w.size());
    for (int v : w) {
        if (out.empty() || out.back() != v) out.push_back(v);
    }
    return out;
}

// Emit all candidates replacing the window w[a..b) by a sub-walk of exactly
// `len` vertices. Interior replacement steps come from neighbor lists; a
// seam may instead join two equal vertices through the implicit reflexive
// edge, and then the candidate compresses. The only pinned choice is that a
// replacement overlapping the start of the walk keeps the start vertex.
void emit_replacements(const Graph& g, const Walk& w, std::size_t a, std::size_t b,
                       std::size_t len, Walk& repl,
                       std::unordered_set<Walk, WalkHash>& out) {
    const std::size_t n = w.size();
    if (repl.size() == len) {
        if (a + len + (n - b) == 0) return;
        if (b < n) {  // right seam: an edge, or a reflexive dwell
            int last = !repl.empty() ? repl.back() : (a > 0 ? w[a - 1] : -1);
            if (last != -1 && last != w[b] && !g.has_edge(last, w[b])) return;
        }
        Walk cand;
        cand.reserve(a + len + (n - b));
        cand.insert(cand.end(), w.begin(), w.begin() + a);
        cand.insert(cand.end(), repl.begin(), repl.end());
        cand.insert(cand.end(), w.begin() + b, w.end());
        cand = compress(cand);
        if (cand.front() != w.front() || cand.back() != w.back()) return;
        out.insert(std::move(cand));
        return;
    }
    if (repl.empty() && a == 0) {
        repl.push_back(w[0]);
        emit_replacements(g, w, a, b, len, repl, out);
        repl.pop_back();
        return;
    }
    const int prev = repl.empty() ? w[a - 1] : repl.back();
    for (int z : g.neighbors(prev)) {
        repl.push_back(z);
        emit_replacements(g, w, a, b, len, repl, out);
        repl.pop_back();
    }
}

}  // namespace

std::vector<Walk> atomic_deformations(const Graph& g, const Walk& w, int delta) {
    if (delta < 2) throw Error("delta must be at least 2");
    if (!validate_walk(g, w)) throw Error("walk is not valid in the graph");
    const std::size_t n = w.size();
    std::unordered_set<Walk, WalkHash> out;
    out.insert(w);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t m = 1; m <= static_cast<std::size_t>(delta - 1) && a + m <= n; ++m) {
            for (std::size_t len = 0; len <= m; ++len) {
                Walk repl;
                emit_replacements(g, w, a, a + m, len, repl, out);
            }
        }
    }
    std::vector<Walk> result(out.begin(), out.end());
    std::sort(result.begin(), result.end());
    return result;
}

ClosureResult deformation_closure(const Graph& g, const Walk& w, int delta,
                                  std::size_t budget) {
    ClosureResult res;
    std::unordered_set<Walk, WalkHash> seen;
    std::deque<Walk> queue;
    seen.insert(w);
    queue.push_back(w);
    while (!queue.empty()) {
        Walk u = std::move(queue.front());
        queue.pop_front();
        for (auto& next : atomic_deformations(g, u, delta)) {
            if (seen.contains(next)) continue;
            if (seen.size() >= budget) {
                res.complete = false;
                res.walks.assign(seen.begin(), seen.end());
                std::sort(res.walks.begin(), res.walks.end());
                return res;
            }
            if (next.size() < w.size()) res.shortened = true;
            seen.insert(next);
            queue.push_back(next);
        }
    }
    res.walks.assign(seen.begin(), seen.end());
    std::sort(res.walks.begin(), res.walks.end());
    return res;
}

}  // namespace pursuit
