#include <doctest.h>

#include <cmath>
#include <random>

#include "hc2l/mincut.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace hc2l;
using namespace hc2l::testing;

TEST_CASE("single path has flow one; attach vertices are removable")
{
    WeightedGraph g(3, {{0, 1, 1}, {1, 2, 1}});
    VertexCutPair cuts = min_vertex_cut(g, {0}, {2});
    CHECK(cuts.flow_value == 1);
    CHECK(cuts.s_side_cut == std::vector<Vertex>{0});
    CHECK(cuts.t_side_cut == std::vector<Vertex>{2});
}

TEST_CASE("two disjoint paths give flow two")
{
    // two internally disjoint routes between the attach neighborhoods
    WeightedGraph g(6, {{0, 1, 1}, {1, 2, 1}, {2, 5, 1}, {0, 3, 1}, {3, 4, 1}, {4, 5, 1}});
    VertexCutPair cuts = min_vertex_cut(g, {1, 3}, {2, 4});
    CHECK(cuts.flow_value == 2);
    CHECK(cuts.s_side_cut == std::vector<Vertex>{1, 3});
    CHECK(cuts.t_side_cut == std::vector<Vertex>{2, 4});
}

TEST_CASE("3x3 grid, left column to right column")
{
    WeightedGraph g = grid_graph(3, 3);
    VertexCutPair cuts = min_vertex_cut(g, {0, 3, 6}, {2, 5, 8});
    CHECK(cuts.flow_value == 3);
    CHECK(separates(g, cuts.s_side_cut, {0, 3, 6}, {2, 5, 8}));
    CHECK(separates(g, cuts.t_side_cut, {0, 3, 6}, {2, 5, 8}));
}

TEST_CASE("overlapping attachment vertex is forced into the cut")
{
    // path a-b-c where b attaches to both terminals
    WeightedGraph g(3, {{0, 1, 1}, {1, 2, 1}});
    VertexCutPair cuts = min_vertex_cut(g, {0, 1}, {1, 2});
    CHECK(cuts.flow_value == 1);
    CHECK(cuts.s_side_cut == std::vector<Vertex>{1});
}

TEST_CASE("flow matches brute-force minimum vertex cut on random regions")
{
    std::mt19937_64 rng(2024);
    int instances = 0;
    while (instances < 60)
    {
        std::uniform_int_distribution<Vertex> size(4, 12);
        Vertex n = size(rng);
        WeightedGraph g = random_connected(rng(), n, 5, 1.2);
        std::uniform_int_distribution<Vertex> pick(0, n - 1);
        Vertex s = pick(rng), t = pick(rng);
        if (s == t)
            continue;
        // single-vertex terminals; direct s-t edges make the cut infeasible
        bool adjacent = false;
        for (const Edge &e : g.neighbors(s))
            adjacent |= e.to == t;
        if (adjacent)
            continue;
        ++instances;

        // exclude the terminals themselves from removal by lifting them out:
        // attach to their neighborhoods instead
        std::vector<Vertex> source_attach, sink_attach;
        for (const Edge &e : g.neighbors(s))
            source_attach.push_back(e.to);
        for (const Edge &e : g.neighbors(t))
            sink_attach.push_back(e.to);

        FlowGraph fg(g, source_attach, sink_attach);
        uint32_t flow = fg.max_flow();
        uint32_t expected = brute_force_vertex_cut(g, source_attach, sink_attach);
        CHECK(flow == expected);

        auto s_cut = fg.source_side_cut();
        auto t_cut = fg.sink_side_cut();
        CHECK(s_cut.size() == flow);
        CHECK(t_cut.size() == flow);
        CHECK(separates(g, s_cut, source_attach, sink_attach));
        CHECK(separates(g, t_cut, source_attach, sink_attach));

        uint32_t split_nodes = 2 * g.vertex_count();
        uint32_t bound = std::min(flow, static_cast<uint32_t>(std::ceil(std::sqrt(split_nodes)))) + 1;
        CHECK(fg.phase_count() <= bound);
    }
}

TEST_CASE("already disconnected region yields empty cuts")
{
    WeightedGraph g(4, {{0, 1, 1}, {2, 3, 1}});
    VertexCutPair cuts = min_vertex_cut(g, {0}, {3});
    CHECK(cuts.flow_value == 0);
    CHECK(cuts.s_side_cut.empty());
    CHECK(cuts.t_side_cut.empty());
}
