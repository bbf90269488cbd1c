#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "medianlab/coloring.hpp"
#include "medianlab/generators.hpp"

using namespace medianlab;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::uniform_real_distribution<double> unit(0, 1);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (unit(rng) < p) edges.emplace_back(a, b);
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("clique number of complete graphs and odd cycles") {
    auto k4 = complete_graph(4);
    auto r = max_clique(k4);
    CHECK(r.exact);
    CHECK(r.size() == 4);
    CHECK(verify_clique(k4, r.clique));

    auto c5 = cycle_graph(5);
    auto r5 = max_clique(c5);
    CHECK(r5.exact);
    CHECK(r5.size() == 2);
}

TEST_CASE("chromatic number of small standard graphs") {
    auto bip = complete_bipartite_graph(3, 4);
    auto r = chromatic_number(bip);
    CHECK(r.optimal);
    CHECK(r.count == 2);
    CHECK(verify_coloring(bip, r.colors));

    auto c5 = chromatic_number(cycle_graph(5));
    CHECK(c5.optimal);
    CHECK(c5.count == 3);

    auto k6 = chromatic_number(complete_graph(6));
    CHECK(k6.optimal);
    CHECK(k6.count == 6);
}

TEST_CASE("greedy coloring basics") {
    auto r = greedy_coloring(Graph(5, {}));
    CHECK(r.count == 1);
    CHECK_FALSE(r.optimal);

    auto kn = greedy_coloring(complete_graph(7));
    CHECK(kn.count == 7);

    std::vector<int> order{4, 3, 2, 1, 0};
    auto given = greedy_coloring(path_graph(5), GreedyOrder::Given, order);
    CHECK(verify_coloring(path_graph(5), given.colors));
    CHECK_THROWS_AS(greedy_coloring(path_graph(5), GreedyOrder::Given, {0, 0, 1, 2, 3}),
                    std::invalid_argument);
}

TEST_CASE("bound sandwich on random graphs") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 12; ++it) {
        auto g = random_graph(rng, 14, 0.35);
        auto clique = max_clique(g);
        auto exact = chromatic_number(g);
        auto greedy = greedy_coloring(g);
        REQUIRE(exact.optimal);
        CHECK(clique.size() <= exact.count);
        CHECK(exact.count <= greedy.count);
        CHECK(verify_coloring(g, exact.colors));
        CHECK(verify_clique(g, exact.clique));
    }
}

TEST_CASE("cliques wider than the 64-color greedy window are still found") {
    // Disjoint K70 and K80: the greedy color bound saturates inside either
    // block, so the fallback bound has to keep the larger block alive.
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 70; ++a) {
        for (int b = a + 1; b < 70; ++b) edges.emplace_back(a, b);
    }
    for (int a = 70; a < 150; ++a) {
        for (int b = a + 1; b < 150; ++b) edges.emplace_back(a, b);
    }
    Graph g(150, std::move(edges));
    auto r = max_clique(g);
    REQUIRE(r.exact);
    CHECK(r.size() == 80);
}

TEST_CASE("solver results are deterministic") {
    std::mt19937_64 rng(5);
    auto g = random_graph(rng, 18, 0.4);
    auto a = chromatic_number(g);
    auto b = chromatic_number(g);
    CHECK(a.count == b.count);
    CHECK(a.colors == b.colors);
    CHECK(a.clique == b.clique);
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("tiny budgets degrade to valid bounds, never wrong answers") {
    std::mt19937_64 rng(31);
    auto g = random_graph(rng, 40, 0.5);
    SolveBudget tiny{64, -1};
    auto r = chromatic_number(g, tiny);
    CHECK_FALSE(r.optimal);
    CHECK(r.lower_bound <= r.upper_bound);
    CHECK(verify_coloring(g, r.colors));
    CHECK(verify_clique(g, r.clique));
    auto full = chromatic_number(g);
    REQUIRE(full.optimal);
    CHECK(r.lower_bound <= full.count);
    CHECK(full.count <= r.upper_bound);
}
