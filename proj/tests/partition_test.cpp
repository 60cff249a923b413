#include <doctest.h>

#include <algorithm>

#include "hc2l/partition.hpp"
#include "support/corpus.hpp"

using namespace hc2l;
using namespace hc2l::testing;

namespace {

bool is_partition(const RoughPartition &rp, Vertex n)
{
    std::vector<int> seen(n, 0);
    for (Vertex v : rp.p_a)
        ++seen[v];
    for (Vertex v : rp.region)
        ++seen[v];
    for (Vertex v : rp.p_b)
        ++seen[v];
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

bool no_cross_edge(const WeightedGraph &g, const CutResult &cr)
{
    std::vector<int> side(g.vertex_count(), 0);
    for (Vertex v : cr.p_a)
        side[v] = 1;
    for (Vertex v : cr.p_b)
        side[v] = 2;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (const Edge &e : g.neighbors(v))
            if (side[v] != 0 && side[e.to] != 0 && side[v] != side[e.to])
                return false;
    return true;
}

} // namespace

TEST_CASE("three-vertex path splits around the middle")
{
    WeightedGraph g(3, {{0, 1, 1}, {1, 2, 1}});
    // seed A is the vertex farthest from the smallest id, here vertex 2
    RoughPartition rp = balanced_partition(g, Beta(3, 10));
    CHECK(rp.p_a == std::vector<Vertex>{2});
    CHECK(rp.region == std::vector<Vertex>{1});
    CHECK(rp.p_b == std::vector<Vertex>{0});

    CutResult cr = balanced_cut(g, Beta(3, 10));
    CHECK(cr.cut == std::vector<Vertex>{1});
    CHECK(cr.p_a.size() == 1);
    CHECK(cr.p_b.size() == 1);
}

TEST_CASE("single vertex degenerates to p_a")
{
    WeightedGraph g(1, {});
    RoughPartition rp = balanced_partition(g, Beta(1, 5));
    CHECK(rp.p_a == std::vector<Vertex>{0});
    CHECK(rp.region.empty());
    CHECK(rp.p_b.empty());
}

TEST_CASE("bottleneck vertex lands in the region")
{
    // two blobs joined through vertex 6 by zero-slack symmetric paths
    std::vector<std::tuple<Vertex, Vertex, Weight>> edges;
    for (Vertex v : {0, 1, 2})
        for (Vertex w : {0, 1, 2})
            if (v < w)
                edges.emplace_back(v, w, 1);
    for (Vertex v : {3, 4, 5})
        for (Vertex w : {3, 4, 5})
            if (v < w)
                edges.emplace_back(v, w, 1);
    edges.emplace_back(2, 6, 1);
    edges.emplace_back(6, 3, 1);
    WeightedGraph g(7, std::move(edges));

    RoughPartition rp = balanced_partition(g, Beta(3, 10));
    CHECK(is_partition(rp, 7));
    CHECK(std::find(rp.region.begin(), rp.region.end(), 6) != rp.region.end());
    CHECK(rp.p_a.size() >= 2);
    CHECK(rp.p_b.size() >= 2);
}

TEST_CASE("star center is a bottleneck")
{
    // every leaf has partition weight 0, so w_A = w_B and the argmin set
    // (the center) must be peeled into the region before resplitting
    WeightedGraph g(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
    RoughPartition rp = balanced_partition(g, Beta(3, 10));
    CHECK(is_partition(rp, 5));
    CHECK(std::find(rp.region.begin(), rp.region.end(), 0) != rp.region.end());
    CHECK_FALSE(rp.p_a.empty());
    CHECK_FALSE(rp.p_b.empty());
}

TEST_CASE("two triangles joined at an articulation vertex")
{
    WeightedGraph g(5, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}});
    CutResult cr = balanced_cut(g, Beta(1, 5));
    CHECK(cr.cut == std::vector<Vertex>{2});
    CHECK(cr.p_a.size() == 2);
    CHECK(cr.p_b.size() == 2);
}

TEST_CASE("8x8 grid cut is small and balanced")
{
    WeightedGraph g = grid_graph(8, 8);
    CutResult cr = balanced_cut(g, Beta(1, 5));
    CHECK(cr.cut.size() <= 8);
    CHECK(cr.p_a.size() * 5 <= 4 * 64);
    CHECK(cr.p_b.size() * 5 <= 4 * 64);
    CHECK(no_cross_edge(g, cr));
}

TEST_CASE("cut result invariants on corpus graphs")
{
    for (const CorpusGraph *cg : corpus_up_to(150))
    {
        const WeightedGraph &g = cg->graph;
        if (g.vertex_count() < 3)
            continue;
        CAPTURE(cg->name);
        CutResult cr = balanced_cut(g, Beta(1, 5));
        CHECK(cr.p_a.size() + cr.cut.size() + cr.p_b.size() == g.vertex_count());
        CHECK(no_cross_edge(g, cr));

        // removing the cut must disconnect the two sides
        std::vector<bool> active(g.vertex_count(), true);
        for (Vertex v : cr.cut)
            active[v] = false;
        if (!cr.p_a.empty() && !cr.p_b.empty())
        {
            auto dist = dijkstra(g, cr.p_a[0], active);
            for (Vertex v : cr.p_b)
                CHECK(dist[v] == INFINITE_DISTANCE);
        }
    }
}

TEST_CASE("partition weight is Lipschitz along edges")
{
    WeightedGraph g = corpus()[1].graph;
    auto d0 = dijkstra(g, 0);
    Vertex v_a = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto da = dijkstra(g, v_a);
    Vertex v_b = static_cast<Vertex>(std::max_element(da.begin(), da.end()) - da.begin());
    auto db = dijkstra(g, v_b);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (const Edge &e : g.neighbors(u))
        {
            int64_t pw_u = static_cast<int64_t>(da[u]) - static_cast<int64_t>(db[u]);
            int64_t pw_v = static_cast<int64_t>(da[e.to]) - static_cast<int64_t>(db[e.to]);
            CHECK(std::abs(pw_u - pw_v) <= 2 * static_cast<int64_t>(e.weight));
        }
}

TEST_CASE("balanced cut is deterministic")
{
    const WeightedGraph &g = corpus()[2].graph;
    CutResult a = balanced_cut(g, Beta(1, 4));
    CutResult b = balanced_cut(g, Beta(1, 4));
    CHECK(a.cut == b.cut);
    CHECK(a.p_a == b.p_a);
    CHECK(a.p_b == b.p_b);
}

TEST_CASE("order_cut sorts ascending and is idempotent")
{
    CHECK(order_cut({16, 5, 12}) == std::vector<Vertex>{5, 12, 16});
    CHECK(order_cut({}) == std::vector<Vertex>{});
    CHECK(order_cut(order_cut({9, 3})) == std::vector<Vertex>{3, 9});
}

TEST_CASE("disconnected input splits by components")
{
    // two equal components: they become the two sides directly
    WeightedGraph g(6, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}, {4, 5, 1}});
    RoughPartition rp = balanced_partition(g, Beta(1, 5));
    CHECK(rp.p_a == std::vector<Vertex>{0, 1, 2});
    CHECK(rp.p_b == std::vector<Vertex>{3, 4, 5});
    CHECK(rp.region.empty());

    CutResult cr = balanced_cut(g, Beta(1, 5));
    CHECK(cr.cut.empty());
    CHECK(cr.p_a.size() + cr.p_b.size() == 6);
}
