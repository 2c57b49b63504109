#pragma once

#include <cstdint>
#include <vector>

#include "pursuit/graph.hpp"
#include "pursuit/walk.hpp"

namespace pursuit {

struct PursuitConfig {
    int source = 0;
    int target = 0;
    int delta = 2;           // emergence interval, must exceed 1
    int num_agents = 1;
    Walk initial_walk;       // walk of agent 0, from source to target
    std::uint64_t seed = 0;
    bool record_ticks = false;
};

// Positions of one agent, one entry per tick starting at spawn_tick. The last
// entry is the tick on which the agent was marked stopped (at the target).
struct AgentTickLog {
    int spawn_tick = 0;
    std::vector<int> positions;
};

struct PursuitTrace {
    // Realized walk per agent in emergence order; stay-put dwells collapsed.
    std::vector<Walk> walks;
    // Present only when record_ticks was set.
    std::vector<AgentTickLog> tick_log;
};

// Synchronous discrete-time chain pursuit. Every active agent steps once per
// tick toward its predecessor's position at the start of the tick; agent 0
// replays the initial walk verbatim. Agent i spawns at the source on tick
// i*delta and stops once it stands on the target with a stopped predecessor.
// Fully determined by the seed.
PursuitTrace run_pursuit(const Graph& g, const PursuitConfig& cfg);

struct VisitFrequencies {
    std::vector<std::int64_t> counts;  // agent walks containing each vertex
    std::vector<double> rates;         // counts / number of agents
};

VisitFrequencies visit_frequencies(const Graph& g, const PursuitTrace& trace);

}  // namespace pursuit
