#include "pursuit/recognize.hpp"

#include <algorithm>
#include <deque>

namespace pursuit {

namespace {

bool simplicial_in(const Graph& g, const std::vector<bool>& active, int v) {
    std::vector<int> nb;
    for (int w : g.neighbors(v)) {
        if (active[w]) nb.push_back(w);
    }
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (!g.has_edge(nb[i], nb[j])) return false;
        }
    }
    return true;
}

// In a stuck residual graph every vertex has two non-adjacent neighbors.
// Take the first vertex v with such a pair (a,b); the shortest a-b path that
// avoids v and v's other neighbors closes a chordless cycle through v.
std::vector<int> extract_chordless_cycle(const Graph& g, const std::vector<bool>& active) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (!active[v]) continue;
        std::vector<int> nb;
        for (int w : g.neighbors(v)) {
            if (active[w]) nb.push_back(w);
        }
        for (std::size_t x = 0; x < nb.size(); ++x) {
            for (std::size_t y = x + 1; y < nb.size(); ++y) {
                int a = nb[x], b = nb[y];
                if (g.has_edge(a, b)) continue;
                std::vector<bool> allowed = active;
                allowed[v] = false;
                for (int w : nb) {
                    if (w != a && w != b) allowed[w] = false;
                }
                std::vector<int> prev(n, -1);
                std::deque<int> queue{a};
                std::vector<bool> seen(n, false);
                seen[a] = true;
                while (!queue.empty()) {
                    int u = queue.front();
                    queue.pop_front();
                    if (u == b) break;
                    for (int w : g.neighbors(u)) {
                        if (!allowed[w] || seen[w]) continue;
                        seen[w] = true;
                        prev[w] = u;
                        queue.push_back(w);
                    }
                }
                if (!seen[b]) continue;
                std::vector<int> cycle{v};
                std::vector<int> path;
                for (int u = b; u != -1; u = prev[u]) path.push_back(u);
                std::reverse(path.begin(), path.end());
                cycle.insert(cycle.end(), path.begin(), path.end());
                return cycle;
            }
        }
    }
    throw Error("no chordless cycle in a stuck residual graph (internal error)");
}

}  // namespace

bool is_simplicial(const Graph& g, int v) {
    g.check_vertex(v, "vertex");
    std::vector<bool> all(g.vertex_count(), true);
    return simplicial_in(g, all, v);
}

ChordalityCertificate is_chordal(const Graph& g) {
    ChordalityCertificate cert;
    const int n = g.vertex_count();
    std::vector<bool> active(n, true);
    for (int round = 0; round < n; ++round) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (active[v] && simplicial_in(g, active, v)) {
                pick = v;
                break;
            }
        }
        if (pick < 0) {
            cert.chordal = false;
            cert.chordless_cycle = extract_chordless_cycle(g, active);
            return cert;
        }
        cert.elimination_order.push_back(pick);
        active[pick] = false;
    }
    cert.chordal = true;
    return cert;
}

bool replay_elimination_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<bool> active(n, true);
    for (int v : order) {
        if (!g.has_vertex(v) || !active[v]) return false;
        if (!simplicial_in(g, active, v)) return false;
        active[v] = false;
    }
    return true;
}

bool verify_chordless_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k < 4) return false;
    std::vector<bool> seen(g.vertex_count(), false);
    for (int v : cycle) {
        if (!g.has_vertex(v) || seen[v]) return false;
        seen[v] = true;
    }
    for (int i = 0; i < k; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % k];
        if (!g.has_edge(a, b)) return false;
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (!consecutive && g.has_edge(cycle[i], cycle[j])) return false;
        }
    }
    return true;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool intersects(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] & b[i]) return true;
    }
    return false;
}

bool triple_intersects(const Bits& a, const Bits& b, const Bits& c) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] & b[i] & c[i]) return true;
    }
    return false;
}

bool subset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] & ~b[i]) return false;
    }
    return true;
}

}  // namespace

PseudoModularResult is_pseudo_modular(const Graph& g, const DistanceMatrix& dm) {
    if (!dm.connected()) throw Error("pseudo-modularity check requires a connected graph");
    const int n = g.vertex_count();
    const int diam = dm.diameter();
    const int radii = diam + 1;
    const std::size_t words = static_cast<std::size_t>((n + 63) / 64);

    std::vector<Bits> disk_bits(static_cast<std::size_t>(n) * radii, Bits(words, 0));
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < radii; ++r) {
            Bits& bits = disk_bits[static_cast<std::size_t>(c) * radii + r];
            for (int u = 0; u < n; ++u) {
                if (dm.at(c, u) <= r) bits[u / 64] |= std::uint64_t{1} << (u % 64);
            }
        }
    }
    auto disk_of = [&](int c, int r) -> const Bits& {
        return disk_bits[static_cast<std::size_t>(c) * radii + r];
    };

    // Same-center disks nest, so witness centers are strictly increasing.
    // A disk containing another can never complete a witness either: the
    // triple intersection collapses to a pairwise one, which is non-empty.
    for (int c1 = 0; c1 < n; ++c1) {
        for (int c2 = c1 + 1; c2 < n; ++c2) {
            for (int c3 = c2 + 1; c3 < n; ++c3) {
                for (int r1 = 0; r1 < radii; ++r1) {
                    const Bits& d1 = disk_of(c1, r1);
                    for (int r2 = 0; r2 < radii; ++r2) {
                        if (r1 + r2 < dm.at(c1, c2)) continue;
                        const Bits& d2 = disk_of(c2, r2);
                        if (subset(d1, d2) || subset(d2, d1)) continue;
                        if (!intersects(d1, d2)) continue;
                        for (int r3 = 0; r3 < radii; ++r3) {
                            if (r1 + r3 < dm.at(c1, c3) || r2 + r3 < dm.at(c2, c3)) continue;
                            const Bits& d3 = disk_of(c3, r3);
                            if (!intersects(d1, d3) || !intersects(d2, d3)) continue;
                            if (subset(d1, d3) || subset(d3, d1)) continue;
                            if (subset(d2, d3) || subset(d3, d2)) continue;
                            if (!triple_intersects(d1, d2, d3)) {
                                PseudoModularResult res;
                                res.pseudo_modular = false;
                                res.witness = HellyWitness{
                                    {DiskSpec{c1, r1}, DiskSpec{c2, r2}, DiskSpec{c3, r3}}};
                                return res;
                            }
                        }
                    }
                }
            }
        }
    }
    return PseudoModularResult{true, std::nullopt};
}

bool verify_helly_witness(const Graph& g, const DistanceMatrix& dm, const HellyWitness& w) {
    std::array<std::vector<int>, 3> members;
    for (int i = 0; i < 3; ++i) {
        members[i] = disk(g, dm, w.disks[i].center, w.disks[i].radius);
    }
    auto common = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };
    auto ab = common(members[0], members[1]);
    auto ac = common(members[0], members[2]);
    auto bc = common(members[1], members[2]);
    if (ab.empty() || ac.empty() || bc.empty()) return false;
    auto abc = common(ab, members[2]);
    return abc.empty();
}

}  // namespace pursuit
