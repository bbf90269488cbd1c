#include <catch2/catch_amalgamated.hpp>

#include "medianlab/generators.hpp"
#include "medianlab/graph.hpp"
#include "test_support.hpp"

using namespace medianlab;

TEST_CASE("graph construction rejects malformed input") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(1, {}, {{0}, {1}}), std::invalid_argument);
}

TEST_CASE("adjacency is sorted and edge lookup works") {
    Graph g(4, {{2, 3}, {0, 3}, {0, 1}, {1, 2}});
    REQUIRE(g.edge_count() == 4);
    auto nb = g.neighbors(0);
    CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>{1, 3});
    CHECK(g.has_edge(3, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.edge_index(1, 0) == g.edge_index(0, 1));
}

TEST_CASE("bfs distances on a path") {
    auto g = path_graph(3);
    auto d = bfs_distances(g, 0);
    CHECK(d == std::vector<int>{0, 1, 2});
    CHECK(d[0] == 0);
    // symmetric when queried both ways
    CHECK(bfs_distances(g, 2)[0] == 2);
}

TEST_CASE("distances on cycles and cubes") {
    CHECK(graph_distance(cycle_graph(4), 0, 2) == 2);
    auto q3 = hypercube_graph(3);
    // antipodal = complementary coordinate tuple
    CHECK(graph_distance(q3, 0, q3.vertex_count() - 1) == 3);
}

TEST_CASE("unknown vertex ids are rejected") {
    auto g = path_graph(3);
    CHECK_THROWS_AS(bfs_distances(g, 7), std::invalid_argument);
    CHECK_THROWS_AS(interval(g, 0, -1), std::invalid_argument);
}

TEST_CASE("degenerate interval is a singleton") {
    auto g = path_graph(5);
    CHECK(interval(g, 2, 2) == std::vector<int>{2});
}

TEST_CASE("interval of an antipodal pair in the 4-cycle is everything") {
    auto g = cycle_graph(4);
    CHECK(interval(g, 0, 2) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("interval matches path enumeration on the 6-cycle") {
    auto g = cycle_graph(6);
    auto expected = test::interval_by_path_enumeration(g, 0, 3);
    CHECK(interval(g, 0, 3) == expected);
    CHECK(expected.size() == 6);  // both halves are shortest paths
}

TEST_CASE("interval matches path enumeration on random trees and grids") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 10; ++it) {
        Graph g = (it % 2 == 0) ? random_tree(rng, 12) : grid_graph({3, 2, 2});
        std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
        int u = pick(rng), v = pick(rng);
        CHECK(interval(g, u, v) == test::interval_by_path_enumeration(g, u, v));
    }
}

TEST_CASE("intervals always contain their endpoints") {
    std::mt19937_64 rng(7);
    auto g = random_median_amalgam(rng, 2);
    std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
    for (int it = 0; it < 20; ++it) {
        int u = pick(rng), v = pick(rng);
        auto iv = interval(g, u, v);
        CHECK(std::binary_search(iv.begin(), iv.end(), u));
        CHECK(std::binary_search(iv.begin(), iv.end(), v));
    }
}

TEST_CASE("connectivity and bipartiteness predicates") {
    CHECK(path_graph(4).is_connected());
    CHECK(path_graph(4).is_bipartite());
    CHECK_FALSE(cycle_graph(5).is_bipartite());
    Graph two_parts(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(two_parts.is_connected());
    CHECK_THROWS_AS(graph_distance(two_parts, 0, 3), std::invalid_argument);
}

TEST_CASE("convexity oracle works on grid sub-boxes") {
    auto g = grid_graph({3, 3});
    // Left column {0,1,2} is convex; an L-shape is not.
    CHECK(is_convex_exhaustive(g, {0, 1, 2}));
    std::array<int, 3> witness{};
    CHECK_FALSE(is_convex_exhaustive(g, {0, 2, 6}, &witness));
}
