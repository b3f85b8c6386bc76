#include <catch2/catch_amalgamated.hpp>

#include <sympaint/errors.hpp>
#include <sympaint/graph.hpp>

using sympaint::DomainError;
using sympaint::Graph;

TEST_CASE("graph construction normalizes edges") {
    Graph g(4, {{2, 1}, {1, 2}, {0, 3}, {3, 0}, {0, 1}});
    REQUIRE(g.vertex_count() == 4);
    REQUIRE(g.edge_count() == 3);
    REQUIRE(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
    REQUIRE(g.neighbors(0) == std::vector<int>{1, 3});
    REQUIRE(g.neighbors(2) == std::vector<int>{1});
    REQUIRE(g.degree(0) == 2);
    REQUIRE(g.adjacent(3, 0));
    REQUIRE_FALSE(g.adjacent(2, 3));
    REQUIRE_FALSE(g.adjacent(1, 1));
}

TEST_CASE("graph rejects bad input") {
    REQUIRE_THROWS_AS(Graph(-1, {}), DomainError);
    REQUIRE_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
    REQUIRE_THROWS_AS(Graph(3, {{-1, 0}}), DomainError);
    REQUIRE_THROWS_AS(Graph(3, {{1, 1}}), DomainError);
    REQUIRE_THROWS_AS(Graph(2, {{0, 1}}, {"a"}), DomainError);
}

TEST_CASE("empty and tiny graphs") {
    Graph g0(0, {});
    REQUIRE(g0.vertex_count() == 0);
    REQUIRE(g0.edge_count() == 0);
    Graph g1(1, {});
    REQUIRE(g1.neighbors(0).empty());
    Graph g2(2, {{0, 1}});
    REQUIRE(g2.adjacent(0, 1));
}

TEST_CASE("vertex labels") {
    Graph g(3, {{0, 1}}, {"a", "b", "c"});
    REQUIRE(g.has_labels());
    REQUIRE(g.label(2) == "c");
    REQUIRE(g.find_label("b") == 1);
    REQUIRE(g.find_label("zzz") == -1);
    Graph plain(3, {{0, 1}});
    REQUIRE_FALSE(plain.has_labels());
}

TEST_CASE("adjacency works past one machine word") {
    // 70 vertices forces multi-word rows.
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < 70; ++v) edges.emplace_back(v - 1, v);
    Graph p(70, edges);
    REQUIRE(p.adjacent(68, 69));
    REQUIRE(p.adjacent(63, 64));
    REQUIRE_FALSE(p.adjacent(0, 69));
    REQUIRE(p.degree(0) == 1);
    REQUIRE(p.degree(35) == 2);
}
