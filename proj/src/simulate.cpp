#include "pursuit/simulate.hpp"

namespace pursuit {

PursuitTrace run_pursuit(const Graph& g, const PursuitConfig& cfg) {
    g.check_vertex(cfg.source, "source");
    g.check_vertex(cfg.target, "target");
    if (cfg.delta < 2) throw Error("delta must exceed 1");
    if (cfg.num_agents < 1) throw Error("need at least one agent");
    if (cfg.initial_walk.empty()) throw Error("initial walk required");
    if (!validate_walk(g, cfg.initial_walk)) throw Error("initial walk is not a walk in the graph");
    if (cfg.initial_walk.front() != cfg.source || cfg.initial_walk.back() != cfg.target) {
        throw Error("initial walk must run from source to target");
    }
    for (std::size_t i = 0; i + 1 < cfg.initial_walk.size(); ++i) {
        if (cfg.initial_walk[i] == cfg.initial_walk[i + 1]) {
            throw Error("initial walk must not repeat a vertex consecutively");
        }
    }
    DistanceMatrix dm = all_pairs_distances(g);
    if (!dm.reachable(cfg.source, cfg.target)) throw Error("source and target are not connected");

    const int k = cfg.num_agents;
    ShortestPathSampler sampler(g, dm);
    Rng rng(cfg.seed);

    std::vector<int> pos(k, -1);  // -1 = not spawned
    std::vector<bool> stopped(k, false);
    std::vector<bool> log_open(k, false);
    std::vector<Walk> walks(k);
    std::vector<AgentTickLog> logs(cfg.record_ticks ? k : 0);

    const int script_len = static_cast<int>(cfg.initial_walk.size());
    int stopped_count = 0;

    // Walk lengths never grow, so the pursuit is over well before this.
    const long long tick_cap =
        static_cast<long long>(k) * cfg.delta + 2LL * script_len + 2LL * g.vertex_count() + 16;

    for (long long tick = 0; stopped_count < k; ++tick) {
        if (tick > tick_cap) throw Error("pursuit failed to terminate (internal error)");

        if (tick % cfg.delta == 0 && tick / cfg.delta < k) {
            int i = static_cast<int>(tick / cfg.delta);
            pos[i] = cfg.source;
            walks[i].push_back(cfg.source);
            if (cfg.record_ticks) {
                logs[i].spawn_tick = static_cast<int>(tick);
                log_open[i] = true;
            }
        }

        // Arrivals, in emergence order so a stop can cascade within a tick.
        for (int i = 0; i < k; ++i) {
            if (pos[i] < 0 || stopped[i]) continue;
            bool done = (i == 0) ? tick >= script_len - 1
                                 : (stopped[i - 1] && pos[i] == cfg.target);
            if (done) {
                stopped[i] = true;
                ++stopped_count;
            }
        }

        if (cfg.record_ticks) {
            for (int i = 0; i < k; ++i) {
                if (!log_open[i]) continue;
                logs[i].positions.push_back(pos[i]);
                if (stopped[i]) log_open[i] = false;
            }
        }

        if (stopped_count == k) break;

        // Synchronous step: everyone targets start-of-tick positions.
        std::vector<int> next = pos;
        for (int i = 0; i < k; ++i) {
            if (pos[i] < 0 || stopped[i]) continue;
            if (i == 0) {
                next[0] = cfg.initial_walk[static_cast<std::size_t>(tick) + 1];
            } else {
                next[i] = sampler.step(pos[i], pos[i - 1], rng);
            }
        }
        for (int i = 0; i < k; ++i) {
            if (pos[i] < 0 || stopped[i] || next[i] == pos[i]) continue;
            pos[i] = next[i];
            walks[i].push_back(pos[i]);
        }
    }

    PursuitTrace trace;
    trace.walks = std::move(walks);
    if (cfg.record_ticks) trace.tick_log = std::move(logs);
    return trace;
}

VisitFrequencies visit_frequencies(const Graph& g, const PursuitTrace& trace) {
    if (trace.walks.empty()) throw Error("trace has no agents");
    VisitFrequencies out;
    out.counts.assign(g.vertex_count(), 0);
    std::vector<int> mark(g.vertex_count(), -1);
    for (std::size_t i = 0; i < trace.walks.size(); ++i) {
        for (int v : trace.walks[i]) {
            g.check_vertex(v, "trace vertex");
            if (mark[v] != static_cast<int>(i)) {
                mark[v] = static_cast<int>(i);
                ++out.counts[v];
            }
        }
    }
    out.rates.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        out.rates[v] = static_cast<double>(out.counts[v]) /
                       static_cast<double>(trace.walks.size());
    }
    return out;
}

}  // namespace pursuit
