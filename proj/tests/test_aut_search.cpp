#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <sympaint/aut_search.hpp>
#include <sympaint/coloring.hpp>
#include <sympaint/errors.hpp>
#include <sympaint/families.hpp>

#include "oracles.hpp"

using namespace sympaint;

namespace {

Graph random_graph(int n, std::mt19937& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 2) edges.emplace_back(u, v);
    return Graph(n, edges);
}

long long brute_order(const Graph& g) {
    return static_cast<long long>(oracles::brute_automorphisms(g).size());
}

}  // namespace

TEST_CASE("known automorphism group orders") {
    REQUIRE(automorphism_group(make_cycle(5)).order() == 10);
    REQUIRE(automorphism_group(make_cycle(6)).order() == 12);
    REQUIRE(automorphism_group(make_complete(4)).order() == 24);
    REQUIRE(automorphism_group(make_complete_bipartite(3, 3)).order() == 72);
    REQUIRE(automorphism_group(make_complete_bipartite(5, 1)).order() == 120);
    REQUIRE(automorphism_group(make_hypercube(3)).order() == 48);
    REQUIRE(automorphism_group(make_hypercube(4)).order() == 384);
    REQUIRE(automorphism_group(make_book(4, 3).graph).order() == 12);
    REQUIRE(automorphism_group(make_asymmetric6()).order() == 1);
    REQUIRE(automorphism_group(Graph(0, {})).order() == 1);
    REQUIRE(automorphism_group(Graph(1, {})).order() == 1);
    REQUIRE(automorphism_group(Graph(2, {})).order() == 2);
    // two disjoint edges: swap within each edge, swap the edges
    REQUIRE(automorphism_group(Graph(4, {{0, 1}, {2, 3}})).order() == 8);
}

TEST_CASE("orders match bijection filtering on a fixed zoo") {
    std::vector<Graph> zoo{
        make_cycle(4),
        make_cycle(7),
        Graph(4, {{0, 1}, {1, 2}, {2, 3}}),
        Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}),
        make_complete(5),
        make_book(4, 2).graph,
        make_book(5, 2).graph,
        make_asymmetric6(),
        make_hypercube(3),
        Graph(8, {{0, 1}, {0, 2}, {0, 4}, {0, 6}, {0, 7}, {1, 3}, {1, 5}, {1, 6},
                  {2, 4}, {2, 5}, {3, 5}, {3, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7}}),
    };
    for (const auto& g : zoo)
        REQUIRE(automorphism_group(g).order() == brute_order(g));
}

TEST_CASE("orders match bijection filtering on random graphs") {
    std::mt19937 rng(20250814);
    for (int n : {6, 6, 6, 6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 8, 8, 8}) {
        Graph g = random_graph(n, rng);
        REQUIRE(automorphism_group(g).order() == brute_order(g));
    }
}

TEST_CASE("every generator preserves adjacency") {
    for (const Graph& g : {make_cycle(6), make_hypercube(3), make_book(4, 3).graph}) {
        auto grp = automorphism_group(g);
        for (const auto& gen : grp.generators()) {
            for (auto [u, v] : g.edges()) REQUIRE(g.adjacent(gen(u), gen(v)));
        }
    }
}

TEST_CASE("colored automorphism groups") {
    Graph c5 = make_cycle(5);
    REQUIRE(automorphism_group(c5, Coloring({0, 0, 0, 1, 2}, 3)).is_trivial());
    REQUIRE(automorphism_group(c5, Coloring({0, 0, 0, 0, 0}, 1)).order() == 10);
    REQUIRE(automorphism_group(c5, Coloring({1, 0, 0, 0, 0}, 2)).order() == 2);

    Graph q3 = make_hypercube(3);
    REQUIRE(automorphism_group(q3, Coloring({0, 1, 0, 1, 1, 1, 2, 1}, 3)).is_trivial());

    REQUIRE_THROWS_AS(automorphism_group(c5, Coloring({0, 0, 0}, 1)), DomainError);
}

TEST_CASE("colored orders match bijection filtering") {
    std::mt19937 rng(42);
    std::vector<Graph> zoo{make_cycle(6), make_complete(5), make_hypercube(3),
                           make_complete_bipartite(3, 3), make_book(4, 2).graph};
    for (const auto& g : zoo) {
        auto auts = oracles::brute_automorphisms(g);
        for (int trial = 0; trial < 5; ++trial) {
            int d = 2 + static_cast<int>(rng() % 2);
            std::vector<int> c(g.vertex_count());
            for (auto& x : c) x = static_cast<int>(rng() % d);
            long long expected = 0;
            for (const auto& a : auts)
                if (oracles::fixes_colors(a, c)) ++expected;
            REQUIRE(automorphism_group(g, Coloring(c, d)).order() == expected);
        }
    }
}

TEST_CASE("equitable refinement") {
    Graph star(6, {{0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
    auto cells = refine(star, OrderedPartition::unit(6)).cells;
    REQUIRE(cells == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}, {5}});

    auto c5cells = refine(make_cycle(5), OrderedPartition::unit(5)).cells;
    REQUIRE(c5cells == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});

    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    auto pcells = refine(p4, OrderedPartition::unit(4)).cells;
    REQUIRE(pcells == std::vector<std::vector<int>>{{0, 3}, {1, 2}});

    OrderedPartition bad;
    bad.cells = {{0, 1}, {1, 2}};
    REQUIRE_THROWS_AS(refine(p4, bad), DomainError);
    OrderedPartition missing;
    missing.cells = {{0, 1}};
    REQUIRE_THROWS_AS(refine(p4, missing), DomainError);
}

TEST_CASE("asymmetry check") {
    REQUIRE(is_asymmetric(make_asymmetric6()));
    REQUIRE_FALSE(is_asymmetric(make_cycle(5)));
    REQUIRE(is_asymmetric(Graph(1, {})));
}

TEST_CASE("search is deterministic") {
    Graph q3 = make_hypercube(3);
    auto a = automorphism_group(q3);
    auto b = automorphism_group(q3);
    REQUIRE(a.generators() == b.generators());
    REQUIRE(a.order() == b.order());
}
