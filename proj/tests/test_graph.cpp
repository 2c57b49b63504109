#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/graph_io.hpp"

using namespace pursuit;
using testutil::fixture;

TEST_CASE("load_graph parses the JSON form") {
    Graph g = load_graph(R"({"n":3,"edges":[[0,1],[1,2]]})");
    CHECK(g.vertex_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("load_graph parses the edge-list form") {
    Graph g = load_graph("3\n0 1\n1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("load_graph rejects malformed input") {
    CHECK_THROWS_AS(load_graph(R"({"n":3,"edges":[[0,3]]})"), ParseError);  // index out of range
    CHECK_THROWS_AS(load_graph(R"({"n":3,"edges":[[0,1],[1,0]]})"), ParseError);  // duplicate
    CHECK_THROWS_AS(load_graph(R"({"n":3,"edges":[[1,1]]})"), ParseError);  // self-loop
    CHECK_THROWS_AS(load_graph(R"({"n":3)"), ParseError);
    CHECK_THROWS_AS(load_graph(R"({"n":3,"edges":[[0,1]],"bogus":1})"), ParseError);
    CHECK_THROWS_AS(load_graph(""), ParseError);
    CHECK_THROWS_AS(load_graph("2\n0 1 7\n"), ParseError);
}

TEST_CASE("dumps are canonical and round-trip") {
    Graph g = load_graph(R"({"n":4,"edges":[[2,3],[1,0],[3,0]],"labels":{"0":"s"},"comment":"x"})");
    std::string json = dump_graph_json(g);
    Graph again = load_graph(json);
    CHECK(again == g);
    CHECK(again.labels == g.labels);
    CHECK(again.comment == g.comment);
    CHECK(dump_graph_json(again) == json);

    std::string edge_list = dump_graph_edge_list(g);
    CHECK(edge_list == "4\n0 1\n0 3\n2 3\n");
    CHECK(dump_graph_edge_list(load_graph(edge_list)) == edge_list);
}

TEST_CASE("a product output with a manifest key still loads") {
    Graph g = load_graph(R"({"n":2,"edges":[[0,1]],"manifest":{"tool":"pursuit"}})");
    CHECK(g.vertex_count() == 2);
}

TEST_CASE("all_pairs_distances matches the spec examples") {
    Graph p3 = make_path(3);
    DistanceMatrix dm = all_pairs_distances(p3);
    CHECK(dm.at(0, 2) == 2);
    Graph c5 = fixture("c5");
    DistanceMatrix d5 = all_pairs_distances(c5);
    CHECK(d5.at(0, 2) == 2);
    CHECK(d5.at(0, 3) == 2);
    for (int v = 0; v < 5; ++v) CHECK(d5.at(v, v) == 0);
}

TEST_CASE("distances agree with a Floyd-Warshall oracle on random graphs") {
    Rng rng(7);
    for (int round = 0; round < 25; ++round) {
        int n = 2 + static_cast<int>(rng.below(9));
        Graph g = testutil::random_connected_graph(rng, n, 25);
        DistanceMatrix dm = all_pairs_distances(g);
        auto oracle = testutil::brute_distances(g);
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                CHECK(dm.at(u, v) == oracle[u][v]);
            }
        }
    }
}

TEST_CASE("distance symmetry and triangle inequality hold on every fixture") {
    for (const char* name : {"c4", "c5", "p5", "grid3x3", "grid4x4", "fig2a", "fig6",
                             "fig9a", "fig9b", "fig11a", "fig11b", "fig11c", "k5"}) {
        Graph g = fixture(name);
        DistanceMatrix dm = all_pairs_distances(g);
        const int n = g.vertex_count();
        for (int u = 0; u < n; ++u) {
            CHECK(dm.at(u, u) == 0);
            for (int v = 0; v < n; ++v) {
                CHECK(dm.at(u, v) == dm.at(v, u));
                for (int w = 0; w < n; ++w) {
                    if (dm.reachable(u, v) && dm.reachable(v, w)) {
                        CHECK(dm.at(u, w) <= dm.at(u, v) + dm.at(v, w));
                    }
                }
            }
        }
    }
}

TEST_CASE("disk follows the membership definition") {
    Graph c5 = fixture("c5");
    DistanceMatrix dm = all_pairs_distances(c5);
    CHECK(disk(c5, dm, 0, 1) == std::vector<int>{0, 1, 4});
    CHECK(disk(c5, dm, 2, 0) == std::vector<int>{2});
    Graph p3 = make_path(3);
    DistanceMatrix d3 = all_pairs_distances(p3);
    CHECK(disk(p3, d3, 1, 1) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(disk(p3, d3, 5, 1), Error);
}

TEST_CASE("shortest path counts") {
    Graph c4 = fixture("c4");
    DistanceMatrix dm = all_pairs_distances(c4);
    CHECK(count_shortest_paths(c4, dm, 0, 2) == 2);
    for (int v = 0; v < 4; ++v) CHECK(count_shortest_paths(c4, dm, v, v) == 1);

    Graph grid = make_grid(3, 3);
    DistanceMatrix dg = all_pairs_distances(grid);
    CHECK(count_shortest_paths(grid, dg, 0, 8) == 6);

    Graph two(2);
    CHECK_THROWS_AS(count_shortest_paths(two, all_pairs_distances(two), 0, 1), Error);
}

TEST_CASE("first-edge counts") {
    Graph c4 = fixture("c4");
    DistanceMatrix dm = all_pairs_distances(c4);
    CHECK(count_shortest_paths_via_edge(c4, dm, 0, 1, 2) == 1);
    CHECK(count_shortest_paths_via_edge(c4, dm, 0, 1, 3) == 0);
    for (int v = 0; v < 4; ++v) CHECK(count_shortest_paths_via_edge(c4, dm, v, v, v) == 1);
    CHECK_THROWS_AS(count_shortest_paths_via_edge(c4, dm, 0, 2, 1), Error);  // not an edge
    CHECK_THROWS_AS(count_shortest_paths_via_edge(c4, dm, 1, 1, 3), Error);  // reflexive off-target
}

TEST_CASE("first-step decomposition: counts split over neighbors") {
    Rng rng(11);
    for (int round = 0; round < 20; ++round) {
        int n = 3 + static_cast<int>(rng.below(8));
        Graph g = testutil::random_connected_graph(rng, n, 30);
        DistanceMatrix dm = all_pairs_distances(g);
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                std::int64_t total = 0;
                for (int w : g.neighbors(u)) {
                    total += count_shortest_paths_via_edge(g, dm, u, w, v);
                }
                CHECK(total == count_shortest_paths(g, dm, u, v));
            }
        }
    }
}

TEST_CASE("path counts overflow loudly, never wrap") {
    // A chain of diamonds doubles the count at every stage: junction i sits
    // at vertex 3i, the two middles of its diamond at 3i+1 and 3i+2.
    const int stages = 70;
    Graph g(3 * stages + 1);
    for (int i = 0; i < stages; ++i) {
        g.add_edge(3 * i, 3 * i + 1);
        g.add_edge(3 * i, 3 * i + 2);
        g.add_edge(3 * i + 1, 3 * (i + 1));
        g.add_edge(3 * i + 2, 3 * (i + 1));
    }
    DistanceMatrix dm = all_pairs_distances(g);
    CHECK(count_shortest_paths(g, dm, 0, 3 * 20) == (1LL << 20));
    CHECK(count_shortest_paths(g, dm, 0, 3 * 62) == (1LL << 62));
    CHECK_THROWS_AS(count_shortest_paths(g, dm, 0, 3 * 63), OverflowError);
    CHECK_THROWS_AS(count_shortest_paths(g, dm, 0, 3 * stages), OverflowError);
}

TEST_CASE("sample_pursuit_step marginals match the count ratios") {
    Graph c4 = fixture("c4");
    DistanceMatrix dm = all_pairs_distances(c4);
    Rng rng(42);
    const int draws = 100000;
    int ones = 0;
    for (int i = 0; i < draws; ++i) {
        int step = sample_pursuit_step(c4, dm, 0, 2, rng);
        CHECK((step == 1 || step == 3));
        ones += step == 1;
    }
    double sigma = std::sqrt(draws * 0.5 * 0.5);
    CHECK(std::abs(ones - draws * 0.5) <= 3 * sigma);

    Graph p3 = make_path(3);
    DistanceMatrix d3 = all_pairs_distances(p3);
    for (int i = 0; i < 50; ++i) CHECK(sample_pursuit_step(p3, d3, 0, 2, rng) == 1);
    CHECK(sample_pursuit_step(p3, d3, 1, 1, rng) == 1);  // stay put at the target

    Graph split(3);
    split.add_edge(0, 1);
    DistanceMatrix ds = all_pairs_distances(split);
    CHECK_THROWS_AS(sample_pursuit_step(split, ds, 0, 2, rng), Error);
}

TEST_CASE("sample_pursuit_step frequencies on an asymmetric split") {
    // From the corner of a 3x3 grid toward the opposite corner the two
    // neighbors carry 3 of 6 shortest paths each.
    Graph grid = make_grid(3, 3);
    DistanceMatrix dm = all_pairs_distances(grid);
    PathCountTable table(grid, dm, 8);
    Rng rng(5);
    const int draws = 100000;
    int via1 = 0;
    for (int i = 0; i < draws; ++i) {
        int step = sample_pursuit_step(grid, dm, table, 0, rng);
        via1 += step == 1;
    }
    double sigma = std::sqrt(draws * 0.5 * 0.5);
    CHECK(std::abs(via1 - draws * 0.5) <= 3 * sigma);
}

TEST_CASE("enumerate_shortest_paths is lexicographic and consistent with counts") {
    Graph c4 = fixture("c4");
    DistanceMatrix dm = all_pairs_distances(c4);
    auto paths = enumerate_shortest_paths(c4, dm, 0, 2, 100);
    CHECK(paths == std::vector<Walk>{{0, 1, 2}, {0, 3, 2}});

    Graph p3 = make_path(3);
    auto unique_path = enumerate_shortest_paths(p3, all_pairs_distances(p3), 0, 2, 100);
    CHECK(unique_path == std::vector<Walk>{{0, 1, 2}});

    Graph grid = make_grid(3, 3);
    DistanceMatrix dg = all_pairs_distances(grid);
    auto six = enumerate_shortest_paths(grid, dg, 0, 8, 100);
    CHECK(six.size() == 6);
    CHECK(std::is_sorted(six.begin(), six.end()));
    CHECK_THROWS_AS(enumerate_shortest_paths(grid, dg, 0, 8, 5), BudgetError);

    Graph two(2);
    CHECK_THROWS_AS(enumerate_shortest_paths(two, all_pairs_distances(two), 0, 1, 10), Error);
}

TEST_CASE("enumeration size equals the count on random graphs") {
    Rng rng(13);
    for (int round = 0; round < 20; ++round) {
        int n = 3 + static_cast<int>(rng.below(7));
        Graph g = testutil::random_connected_graph(rng, n, 35);
        DistanceMatrix dm = all_pairs_distances(g);
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                auto paths = enumerate_shortest_paths(g, dm, u, v, 100000);
                CHECK(static_cast<std::int64_t>(paths.size()) ==
                      count_shortest_paths(g, dm, u, v));
                CHECK(paths == testutil::brute_shortest_paths(g, u, v));
            }
        }
    }
}
