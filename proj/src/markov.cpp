#include "pursuit/markov.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace pursuit {

bool ClosedClass::contains(const Walk& w) const {
    return std::binary_search(walks.begin(), walks.end(), w);
}

namespace {

void enumerate_rec(const Graph& g, const DistanceMatrix& dm, int t, int delta, int length,
                   std::size_t budget, Walk& w, std::vector<Walk>& out) {
    const int i = static_cast<int>(w.size()) - 1;
    if (i >= delta && dm.at(w[i - delta], w[i]) != delta) return;
    const int remaining = length - 1 - i;
    const int dt = dm.at(w[i], t);
    if (dt == DistanceMatrix::kUnreachable || dt > remaining) return;
    if (remaining == 0) {
        if (w[i] == t) {
            if (out.size() >= budget) {
                throw BudgetError("delta-optimal walk budget (" + std::to_string(budget) +
                                  ") exceeded");
            }
            out.push_back(w);
        }
        return;
    }
    for (int z : g.neighbors(w[i])) {
        w.push_back(z);
        enumerate_rec(g, dm, t, delta, length, budget, w, out);
        w.pop_back();
    }
}

}  // namespace

std::vector<Walk> enumerate_delta_optimal_walks(const Graph& g, const DistanceMatrix& dm,
                                                int s, int t, int delta, int length,
                                                std::size_t budget) {
    g.check_vertex(s, "source");
    g.check_vertex(t, "target");
    if (delta < 2) throw Error("delta must be at least 2");
    if (length < 1) throw Error("walk length must be positive");
    std::vector<Walk> out;
    Walk w{s};
    enumerate_rec(g, dm, t, delta, length, budget, w, out);
    return out;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<ClosedClass> enumerate_closed_classes(const Graph& g, const DistanceMatrix& dm,
                                                  int s, int t, int delta, int max_length,
                                                  std::size_t budget) {
    g.check_vertex(s, "source");
    g.check_vertex(t, "target");
    if (delta < 2) throw Error("delta must be at least 2");
    if (!dm.reachable(s, t)) throw Error("source and target are not connected");
    const int dist = dm.at(s, t);

    std::vector<ClosedClass> classes;
    std::size_t total_states = 0;

    // Equal-length atomic deformations are reversible, so within one length
    // stratum "connected by deformations" is an equivalence. A component is a
    // closed class unless some member leaks: deforms to a shorter walk, or to
    // an equal-length walk that is not delta-optimal (which always shortens
    // eventually and so escapes the stratum).
    for (int length = dist + 1; length <= max_length; ++length) {
        std::vector<Walk> walks =
            enumerate_delta_optimal_walks(g, dm, s, t, delta, length, budget);
        if (walks.empty()) continue;
        total_states += walks.size();
        if (total_states > budget) {
            throw BudgetError("closed-class state budget (" + std::to_string(budget) +
                              ") exceeded");
        }
        std::unordered_map<Walk, int, WalkHash> index;
        index.reserve(walks.size() * 2);
        for (std::size_t i = 0; i < walks.size(); ++i) index.emplace(walks[i], static_cast<int>(i));

        Dsu dsu(static_cast<int>(walks.size()));
        std::vector<bool> leaky(walks.size(), false);
        for (std::size_t i = 0; i < walks.size(); ++i) {
            for (const Walk& target : atomic_deformations(g, walks[i], delta)) {
                if (target == walks[i]) continue;
                if (target.size() < walks[i].size()) {
                    leaky[i] = true;
                } else if (auto it = index.find(target); it != index.end()) {
                    dsu.unite(static_cast<int>(i), it->second);
                } else {
                    leaky[i] = true;  // equal length but not delta-optimal
                }
            }
        }

        std::unordered_map<int, std::vector<int>> components;
        for (std::size_t i = 0; i < walks.size(); ++i) {
            components[dsu.find(static_cast<int>(i))].push_back(static_cast<int>(i));
        }
        std::vector<int> roots;
        for (auto& [root, members] : components) {
            bool leaks = false;
            for (int m : members) leaks = leaks || leaky[m];
            if (!leaks) roots.push_back(root);
        }
        std::sort(roots.begin(), roots.end(), [&](int a, int b) {
            return walks[components[a].front()] < walks[components[b].front()];
        });
        for (int root : roots) {
            ClosedClass cls;
            cls.source = s;
            cls.target = t;
            cls.delta = delta;
            cls.length = length;
            for (int m : components[root]) cls.walks.push_back(walks[m]);
            std::sort(cls.walks.begin(), cls.walks.end());
            classes.push_back(std::move(cls));
        }
    }
    return classes;
}

ConvergenceVerdict is_convergent_bounded(const Graph& g, const DistanceMatrix& dm,
                                         int s, int t, int delta, int max_length,
                                         std::size_t budget) {
    auto classes = enumerate_closed_classes(g, dm, s, t, delta, max_length, budget);
    ConvergenceVerdict v{Convergence::kConvergentUpToBound, max_length, std::nullopt};
    for (auto& cls : classes) {
        if (cls.length > dm.at(s, t) + 1) {
            v.kind = Convergence::kCounterexample;
            v.counterexample = std::move(cls);
            break;
        }
    }
    return v;
}

StabilityVerdict is_stable_bounded(const Graph& g, const DistanceMatrix& dm,
                                   int s, int t, int delta, int max_length,
                                   std::size_t budget) {
    StabilityVerdict v;
    v.max_length = max_length;
    v.classes = enumerate_closed_classes(g, dm, s, t, delta, max_length, budget);
    for (const auto& cls : v.classes) {
        if (cls.length > dm.at(s, t) + 1) {
            v.kind = Stability::kNonShortestClass;
            return v;
        }
    }
    if (v.classes.size() != 1) {
        v.kind = Stability::kMultipleClasses;
        return v;
    }
    // The unique class must be the whole shortest-path set; enumerate those
    // independently rather than trusting the class machinery.
    std::vector<Walk> shortest = enumerate_shortest_paths(g, dm, s, t, budget);
    if (v.classes.front().walks != shortest) {
        throw Error("unique closed class disagrees with shortest-path enumeration");
    }
    v.kind = Stability::kStableUpToBound;
    return v;
}

mpq_class transition_probability(const Graph& g, const DistanceMatrix& dm,
                                 const ClosedClass& cls, const Walk& U, const Walk& X) {
    if (!cls.contains(U) || !cls.contains(X)) throw Error("walks are not members of the class");
    const int n = cls.length;
    const int delta = cls.delta;
    mpq_class p(1);
    for (int i = 0; i < n; ++i) {
        const int xi = X[i];
        const int xnext = (i + 1 < n) ? X[i + 1] : X[n - 1];  // x_{n+k} = x_n
        const int utgt = U[std::min(i + delta, n - 1)];        // u_{n+k} = u_n
        std::int64_t num;
        if (xi == xnext) {
            num = (xi == utgt) ? 1 : 0;
        } else {
            num = count_shortest_paths_via_edge(g, dm, xi, xnext, utgt);
        }
        if (num == 0) return mpq_class(0);
        std::int64_t den = count_shortest_paths(g, dm, xi, utgt);
        p *= mpq_class(static_cast<long>(num), static_cast<long>(den));
    }
    p.canonicalize();
    return p;
}

TransitionMatrix transition_matrix(const Graph& g, const DistanceMatrix& dm,
                                   const ClosedClass& cls) {
    TransitionMatrix m;
    m.states = cls.walks;
    m.delta = cls.delta;
    const int n = static_cast<int>(cls.walks.size());
    m.rows.resize(n);
    for (int r = 0; r < n; ++r) {
        m.rows[r].resize(n);
        mpq_class sum(0);
        for (int c = 0; c < n; ++c) {
            m.rows[r][c] = transition_probability(g, dm, cls, cls.walks[r], cls.walks[c]);
            sum += m.rows[r][c];
        }
        if (sum != 1) {
            throw Error("row " + std::to_string(r) + " sums to " + sum.get_str() +
                        ", not 1: class is not closed");
        }
    }
    return m;
}

bool TransitionMatrix::doubly_stochastic() const {
    const int n = size();
    for (int c = 0; c < n; ++c) {
        mpq_class sum(0);
        for (int r = 0; r < n; ++r) sum += rows[r][c];
        if (sum != 1) return false;
    }
    return true;
}

namespace {

std::vector<int> reachable_from(const std::vector<std::vector<mpq_class>>& rows, int start,
                                bool transpose) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> depth(n, -1);
    std::deque<int> queue{start};
    depth[start] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v) {
            const mpq_class& p = transpose ? rows[v][u] : rows[u][v];
            if (p > 0 && depth[v] < 0) {
                depth[v] = depth[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return depth;
}

}  // namespace

bool TransitionMatrix::irreducible() const {
    if (size() == 0) return false;
    auto fwd = reachable_from(rows, 0, false);
    auto bwd = reachable_from(rows, 0, true);
    for (int v = 0; v < size(); ++v) {
        if (fwd[v] < 0 || bwd[v] < 0) return false;
    }
    return true;
}

bool TransitionMatrix::aperiodic() const {
    // gcd over all positive transitions (u,v) of depth(u) + 1 - depth(v),
    // which equals the chain's period on an irreducible state space.
    if (!irreducible()) return false;
    auto depth = reachable_from(rows, 0, false);
    int g = 0;
    for (int u = 0; u < size(); ++u) {
        for (int v = 0; v < size(); ++v) {
            if (rows[u][v] > 0) g = std::gcd(g, std::abs(depth[u] + 1 - depth[v]));
        }
    }
    return g == 1;
}

namespace {

std::vector<mpq_class> solve_stationary_exact(const TransitionMatrix& m) {
    const int n = m.size();
    // Unknown pi as a column: (P^T - I) pi = 0 with the last equation
    // replaced by sum(pi) = 1. Gauss-Jordan with exact pivoting.
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1, mpq_class(0)));
    for (int r = 0; r < n - 1; ++r) {
        for (int c = 0; c < n; ++c) {
            a[r][c] = m.rows[c][r] - (r == c ? mpq_class(1) : mpq_class(0));
        }
    }
    for (int c = 0; c < n; ++c) a[n - 1][c] = 1;
    a[n - 1][n] = 1;

    for (int col = 0, row = 0; col < n && row < n; ++col) {
        int pivot = -1;
        for (int r = row; r < n; ++r) {
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw Error("singular stationary system");
        std::swap(a[row], a[pivot]);
        mpq_class inv = a[row][col];
        for (int c = col; c <= n; ++c) a[row][c] /= inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (int c = col; c <= n; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
    }
    std::vector<mpq_class> pi(n);
    for (int r = 0; r < n; ++r) pi[r] = a[r][n];
    return pi;
}

std::vector<double> solve_stationary_power(const TransitionMatrix& m) {
    const int n = m.size();
    std::vector<std::vector<double>> p(n, std::vector<double>(n));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) p[r][c] = m.rows[r][c].get_d();
    }
    // Damped iteration pi <- pi (P + I)/2 keeps the same stationary vector
    // and converges from any start even for a periodic chain.
    std::vector<double> pi(n, 0.0), next(n);
    pi[0] = 1.0;
    for (long iter = 0; iter < 1'000'000; ++iter) {
        for (int c = 0; c < n; ++c) next[c] = 0.5 * pi[c];
        for (int r = 0; r < n; ++r) {
            if (pi[r] == 0.0) continue;
            const double w = 0.5 * pi[r];
            for (int c = 0; c < n; ++c) next[c] += w * p[r][c];
        }
        double diff = 0;
        for (int c = 0; c < n; ++c) diff = std::max(diff, std::abs(next[c] - pi[c]));
        pi.swap(next);
        if (diff < kPowerIterationTol) return pi;
    }
    throw Error("power iteration failed to converge");
}

}  // namespace

StationaryDistribution stationary_distribution(const TransitionMatrix& m,
                                               std::optional<SolveMethod> force) {
    if (m.size() == 0) throw Error("empty transition matrix");
    if (!m.irreducible()) throw Error("transition matrix is reducible");
    StationaryDistribution out;
    const bool exact = force ? *force == SolveMethod::kExactRational
                             : m.size() <= kExactSolveLimit;
    if (exact) {
        out.method = SolveMethod::kExactRational;
        out.exact = solve_stationary_exact(m);
        out.approx.reserve(out.exact.size());
        for (const auto& q : out.exact) out.approx.push_back(q.get_d());
    } else {
        out.method = SolveMethod::kPowerIteration;
        out.approx = solve_stationary_power(m);
    }
    return out;
}

bool StationaryDistribution::exactly_uniform() const {
    if (exact.empty()) return false;
    const mpq_class want(1, static_cast<long>(exact.size()));
    for (const auto& q : exact) {
        if (q != want) return false;
    }
    return true;
}

double StationaryDistribution::max_deviation_from_uniform() const {
    const double want = 1.0 / static_cast<double>(approx.size());
    double dev = 0;
    for (double x : approx) dev = std::max(dev, std::abs(x - want));
    return dev;
}

Walk shuffle_walk(ShortestPathSampler& sampler, const Walk& u, int i, int j, Rng& rng) {
    const int n = static_cast<int>(u.size());
    if (i < 1 || j < i) throw Error("shuffle indices must satisfy 1 <= i <= j");
    if (i > n) throw Error("shuffle start index exceeds walk length");
    j = std::min(j, n);  // S^i_{n+k} = S^i_n
    if (i == j) return u;
    Walk path = sampler.sample_path(u[i - 1], u[j - 1], rng);
    Walk out(u.begin(), u.begin() + (i - 1));
    out.insert(out.end(), path.begin(), path.end());
    out.insert(out.end(), u.begin() + j, u.end());
    return out;
}

Walk shuffle_walk(const Graph& g, const DistanceMatrix& dm, const Walk& u,
                  int i, int j, Rng& rng) {
    ShortestPathSampler sampler(g, dm);
    return shuffle_walk(sampler, u, i, j, rng);
}

Walk sequential_shuffle(ShortestPathSampler& sampler, const Walk& u, int delta, Rng& rng) {
    if (delta < 2) throw Error("delta must be at least 2");
    Walk cur = u;
    for (int i = 1; i <= static_cast<int>(cur.size()); ++i) {
        cur = shuffle_walk(sampler, cur, i, i + delta, rng);
    }
    return cur;
}

Walk sequential_shuffle(const Graph& g, const DistanceMatrix& dm, const Walk& u,
                        int delta, Rng& rng) {
    ShortestPathSampler sampler(g, dm);
    return sequential_shuffle(sampler, u, delta, rng);
}

}  // namespace pursuit
