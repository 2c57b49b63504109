#include <doctest.h>

#include <cmath>
#include <map>

#include "helpers.hpp"
#include "pursuit/graph_io.hpp"
#include "pursuit/markov.hpp"
#include "pursuit/simulate.hpp"

using namespace pursuit;
using testutil::fixture;

namespace {

PursuitConfig config(int s, int t, int delta, Walk initial, int agents, std::uint64_t seed,
                     bool ticks = false) {
    PursuitConfig cfg;
    cfg.source = s;
    cfg.target = t;
    cfg.delta = delta;
    cfg.initial_walk = std::move(initial);
    cfg.num_agents = agents;
    cfg.seed = seed;
    cfg.record_ticks = ticks;
    return cfg;
}

// d(A_i, A_{i-1}) <= delta, non-increasing except that a collision may bounce
// back to distance 1. Checked tick by tick while agent i is live; a stopped
// predecessor counts as parked on the target.
void check_distance_law(const Graph& g, const PursuitTrace& trace, int target, int delta) {
    DistanceMatrix dm = all_pairs_distances(g);
    REQUIRE(trace.tick_log.size() == trace.walks.size());
    for (std::size_t i = 1; i < trace.tick_log.size(); ++i) {
        const auto& me = trace.tick_log[i];
        const auto& pred = trace.tick_log[i - 1];
        int previous = -1;
        for (std::size_t k = 0; k < me.positions.size(); ++k) {
            int tick = me.spawn_tick + static_cast<int>(k);
            int pred_idx = tick - pred.spawn_tick;
            REQUIRE(pred_idx >= 0);
            int pred_pos = pred_idx < static_cast<int>(pred.positions.size())
                               ? pred.positions[pred_idx]
                               : target;
            int d = dm.at(me.positions[k], pred_pos);
            CHECK(d <= delta);
            if (previous >= 0) {
                CHECK(d <= std::max(previous, 1));
            }
            previous = d;
        }
    }
}

void check_monotone_lengths(const PursuitTrace& trace) {
    for (std::size_t i = 1; i < trace.walks.size(); ++i) {
        CHECK(trace.walks[i].size() <= trace.walks[i - 1].size());
    }
}

}  // namespace

TEST_CASE("a forced unique path pins every agent") {
    Graph p3 = make_path(3);
    auto trace = run_pursuit(p3, config(0, 2, 2, {0, 1, 2}, 5, 1));
    REQUIRE(trace.walks.size() == 5);
    for (const auto& w : trace.walks) CHECK(w == Walk{0, 1, 2});
}

TEST_CASE("the rigid loop walk persists forever") {
    Graph c5 = fixture("c5");
    auto trace = run_pursuit(c5, config(0, 1, 2, {0, 4, 3, 2, 1}, 100, 7));
    for (const auto& w : trace.walks) CHECK(w == Walk{0, 4, 3, 2, 1});
}

TEST_CASE("the two-path class splits half and half") {
    Graph c4 = fixture("c4");
    const int agents = 10000;
    auto trace = run_pursuit(c4, config(0, 2, 2, {0, 1, 2}, agents, 99));
    int top = 0;
    for (const auto& w : trace.walks) {
        REQUIRE((w == Walk{0, 1, 2} || w == Walk{0, 3, 2}));
        top += w == Walk{0, 1, 2};
    }
    double sigma = std::sqrt(agents * 0.25);
    CHECK(std::abs(top - agents / 2.0) <= 3 * sigma);
}

TEST_CASE("traces replay bit-exactly from the seed") {
    Graph grid = make_grid(3, 3);
    Walk wander{0, 1, 4, 1, 2, 5, 4, 7, 8};
    auto a = run_pursuit(grid, config(0, 8, 2, wander, 200, 4242, true));
    auto b = run_pursuit(grid, config(0, 8, 2, wander, 200, 4242, true));
    CHECK(a.walks == b.walks);
    REQUIRE(a.tick_log.size() == b.tick_log.size());
    for (std::size_t i = 0; i < a.tick_log.size(); ++i) {
        CHECK(a.tick_log[i].spawn_tick == b.tick_log[i].spawn_tick);
        CHECK(a.tick_log[i].positions == b.tick_log[i].positions);
    }
    auto c = run_pursuit(grid, config(0, 8, 2, wander, 200, 4243));
    CHECK(a.walks != c.walks);
}

TEST_CASE("the distance law and monotone lengths hold on seeded runs") {
    struct Run {
        const char* name;
        int s, t, delta;
        Walk initial;
    };
    const Run runs[] = {
        {"c4", 0, 2, 2, {0, 1, 2}},
        {"c5", 0, 1, 2, {0, 4, 3, 2, 1}},
        {"c5", 0, 1, 2, {0, 1, 2, 3, 4, 0, 1}},
        {"grid3x3", 0, 8, 2, {0, 3, 4, 1, 2, 5, 4, 7, 6, 7, 8}},
        {"grid3x3", 0, 8, 3, {0, 1, 4, 3, 6, 7, 4, 5, 8}},
        {"fig2a", 0, 9, 2, {0, 1, 2, 4, 3, 4, 6, 8, 9}},
        {"fig9a", 0, 3, 2, {0, 1, 2, 3}},
    };
    for (const auto& r : runs) {
        Graph g = fixture(r.name);
        REQUIRE(validate_walk(g, r.initial));
        for (std::uint64_t seed : {1ULL, 2ULL}) {
            auto trace = run_pursuit(g, config(r.s, r.t, r.delta, r.initial, 120, seed, true));
            check_monotone_lengths(trace);
            check_distance_law(g, trace, r.t, r.delta);
            CHECK(trace.walks.front() == r.initial);
            for (const auto& w : trace.walks) {
                CHECK(validate_walk(g, w));
                CHECK(w.front() == r.s);
                CHECK(w.back() == r.t);
            }
        }
    }
}

TEST_CASE("every successor walk is a deformation of its predecessor") {
    struct Run {
        const char* name;
        int s, t;
        Walk initial;
    };
    const Run runs[] = {
        {"c4", 0, 2, {0, 1, 2, 3, 0, 1, 2}},
        {"grid3x3", 0, 8, {0, 3, 4, 1, 2, 5, 4, 7, 6, 7, 8}},
        {"fig2a", 0, 9, {0, 1, 2, 4, 3, 4, 6, 8, 9}},
    };
    for (const auto& r : runs) {
        Graph g = fixture(r.name);
        auto trace = run_pursuit(g, config(r.s, r.t, 2, r.initial, 40, 31337));
        for (std::size_t i = 0; i + 1 < trace.walks.size(); ++i) {
            auto closure = deformation_closure(g, trace.walks[i], 2, 200000);
            REQUIRE(closure.complete);
            CHECK(std::binary_search(closure.walks.begin(), closure.walks.end(),
                                     trace.walks[i + 1]));
        }
    }
}

TEST_CASE("long runs stabilize inside one closed class") {
    Graph grid = make_grid(3, 3);
    Walk wander{0, 1, 4, 1, 2, 5, 4, 7, 8};
    auto trace = run_pursuit(grid, config(0, 8, 2, wander, 400, 2024));
    const auto& tail_walk = trace.walks.back();
    auto closure = deformation_closure(grid, tail_walk, 2);
    REQUIRE(closure.complete);
    CHECK_FALSE(closure.shortened);
    // All lengths equal in the tail, and every tail walk sits in the closure.
    std::size_t start = trace.walks.size() / 2;
    for (std::size_t i = start; i < trace.walks.size(); ++i) {
        CHECK(trace.walks[i].size() == tail_walk.size());
        CHECK(std::binary_search(closure.walks.begin(), closure.walks.end(), trace.walks[i]));
    }
}

TEST_CASE("visit frequencies") {
    Graph p3 = make_path(3);
    auto trace = run_pursuit(p3, config(0, 2, 2, {0, 1, 2}, 50, 3));
    auto freq = visit_frequencies(p3, trace);
    CHECK(freq.rates[1] == 1.0);

    Graph c4 = fixture("c4");
    auto split = run_pursuit(c4, config(0, 2, 2, {0, 1, 2}, 10000, 8));
    auto f4 = visit_frequencies(c4, split);
    CHECK(f4.rates[0] == 1.0);
    CHECK(f4.rates[2] == 1.0);
    CHECK(f4.rates[1] + f4.rates[3] == doctest::Approx(1.0));
    CHECK(std::abs(f4.rates[1] - 0.5) < 0.05);

    // Walks with no interior leave interior counts at zero.
    auto direct = run_pursuit(c4, config(0, 1, 2, {0, 1}, 20, 5));
    auto fd = visit_frequencies(c4, direct);
    CHECK(fd.counts[2] == 0);
    CHECK(fd.counts[3] == 0);
    CHECK(fd.rates[0] == 1.0);
}

TEST_CASE("run_pursuit validates its configuration") {
    Graph c4 = fixture("c4");
    CHECK_THROWS_AS(run_pursuit(c4, config(0, 2, 1, {0, 1, 2}, 5, 1)), Error);   // delta
    CHECK_THROWS_AS(run_pursuit(c4, config(0, 2, 2, {0, 1, 2}, 0, 1)), Error);   // agents
    CHECK_THROWS_AS(run_pursuit(c4, config(0, 2, 2, {}, 5, 1)), Error);          // no walk
    CHECK_THROWS_AS(run_pursuit(c4, config(0, 2, 2, {0, 2}, 5, 1)), Error);      // not a walk
    CHECK_THROWS_AS(run_pursuit(c4, config(0, 2, 2, {1, 2}, 5, 1)), Error);      // wrong start
    Graph two(2);
    CHECK_THROWS_AS(run_pursuit(two, config(0, 1, 2, {0, 1}, 5, 1)), Error);     // disconnected
}

TEST_CASE("source equal to target degenerates cleanly") {
    Graph c4 = fixture("c4");
    auto trace = run_pursuit(c4, config(0, 0, 2, {0}, 5, 1));
    for (const auto& w : trace.walks) CHECK(w == Walk{0});

    // A looping first walk around the cycle collapses to the trivial walk:
    // the only closed class from a vertex to itself is the single vertex.
    auto loop = run_pursuit(c4, config(0, 0, 2, {0, 1, 2, 3, 0}, 60, 21, true));
    check_monotone_lengths(loop);
    check_distance_law(c4, loop, 0, 2);
    CHECK(loop.walks.front() == Walk{0, 1, 2, 3, 0});
    CHECK(loop.walks.back() == Walk{0});
}
