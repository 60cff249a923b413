#include <doctest.h>

#include <sstream>

#include "hc2l/graph.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace hc2l;
using namespace hc2l::testing;

TEST_CASE("dimacs parsing")
{
    SUBCASE("basic arcs")
    {
        std::istringstream in("p sp 3 2\na 1 2 5\na 2 3 7\n");
        WeightedGraph g = parse_dimacs(in);
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 2);
        CHECK(g.neighbors(1).size() == 2);
        CHECK(g.neighbors(0)[0] == Edge{1, 5});
    }
    SUBCASE("symmetric duplicate collapses")
    {
        std::istringstream in("p sp 2 2\na 1 2 4\na 2 1 4\n");
        WeightedGraph g = parse_dimacs(in);
        CHECK(g.edge_count() == 1);
        CHECK(g.neighbors(0)[0] == Edge{1, 4});
    }
    SUBCASE("comments and blank lines skipped")
    {
        std::istringstream in("c header\n\np sp 2 1\nc mid\na 1 2 9\n");
        CHECK(parse_dimacs(in).edge_count() == 1);
    }
    SUBCASE("multi-edge keeps minimum weight")
    {
        std::istringstream in("p sp 2 3\na 1 2 9\na 2 1 3\na 1 2 5\n");
        WeightedGraph g = parse_dimacs(in);
        CHECK(g.neighbors(0)[0].weight == 3);
    }
    SUBCASE("errors carry line numbers")
    {
        std::istringstream bad_id("p sp 2 1\na 1 5 1\n");
        CHECK_THROWS_WITH_AS(parse_dimacs(bad_id), doctest::Contains("line 2"), ParseError);
        std::istringstream bad_weight("p sp 2 1\na 1 2 0\n");
        CHECK_THROWS_AS(parse_dimacs(bad_weight), ParseError);
        std::istringstream junk("p sp 2 1\nx 1 2 3\n");
        CHECK_THROWS_AS(parse_dimacs(junk), ParseError);
        std::istringstream no_problem("a 1 2 3\n");
        CHECK_THROWS_AS(parse_dimacs(no_problem), ParseError);
    }
}

TEST_CASE("self loops dropped")
{
    WeightedGraph g(3, {{0, 0, 5}, {0, 1, 2}, {1, 2, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 1);
}

TEST_CASE("dijkstra")
{
    SUBCASE("path")
    {
        WeightedGraph g(3, {{0, 1, 1}, {1, 2, 1}});
        auto d = dijkstra(g, 0);
        CHECK(d == std::vector<Distance>{0, 1, 2});
    }
    SUBCASE("disconnected pair")
    {
        WeightedGraph g(2, {});
        CHECK(dijkstra(g, 0)[1] == INFINITE_DISTANCE);
    }
    SUBCASE("matches bellman-ford on random graphs")
    {
        for (uint64_t seed = 1; seed <= 5; ++seed)
        {
            WeightedGraph g = random_connected(seed, 50, 100);
            for (Vertex s : {Vertex{0}, Vertex{17}, Vertex{49}})
                CHECK(dijkstra(g, s) == bellman_ford(g, s));
        }
    }
    SUBCASE("symmetric on a corpus graph")
    {
        const WeightedGraph &g = corpus()[0].graph;
        auto d0 = dijkstra(g, 0);
        for (Vertex t = 0; t < g.vertex_count(); t += 7)
            CHECK(dijkstra(g, t)[0] == d0[t]);
    }
}

TEST_CASE("masked dijkstra ignores inactive vertices")
{
    // path 0-1-2 with a detour 0-3-2; masking 1 forces the detour
    WeightedGraph g(4, {{0, 1, 1}, {1, 2, 1}, {0, 3, 5}, {3, 2, 5}});
    std::vector<bool> active{true, false, true, true};
    auto d = dijkstra(g, 0, active);
    CHECK(d[2] == 10);
}

TEST_CASE("connected components")
{
    SUBCASE("connected graph is one component")
    {
        WeightedGraph g = random_connected(3, 40, 10);
        auto comps = connected_components(g);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].size() == 40);
    }
    SUBCASE("two disjoint triangles")
    {
        WeightedGraph g(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
        auto comps = connected_components(g);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0] == std::vector<Vertex>{0, 1, 2});
        CHECK(comps[1] == std::vector<Vertex>{3, 4, 5});
    }
    SUBCASE("removing a path's cut vertex splits it")
    {
        // path 0-1-2 with vertex 1 isolated by dropping its edges
        WeightedGraph g(3, {});
        CHECK(connected_components(g).size() == 3);
    }
    SUBCASE("ordered by decreasing size")
    {
        WeightedGraph g(5, {{0, 1, 1}, {1, 2, 1}});
        auto comps = connected_components(g);
        REQUIRE(comps.size() == 3);
        CHECK(comps[0].size() == 3);
        CHECK(comps[1] == std::vector<Vertex>{3});
        CHECK(comps[2] == std::vector<Vertex>{4});
    }
}

TEST_CASE("fingerprint binds to content")
{
    WeightedGraph a(3, {{0, 1, 2}, {1, 2, 3}});
    WeightedGraph b(3, {{1, 2, 3}, {0, 1, 2}}); // same edges, different input order
    WeightedGraph c(3, {{0, 1, 2}, {1, 2, 4}});
    CHECK(graph_fingerprint(a) == graph_fingerprint(b));
    CHECK(graph_fingerprint(a) != graph_fingerprint(c));
}
