#include <doctest.h>

#include <algorithm>

#include "hc2l/labels.hpp"
#include "support/corpus.hpp"

using namespace hc2l;
using namespace hc2l::testing;

namespace {

std::vector<bool> prune_set(Vertex n, std::initializer_list<Vertex> members)
{
    std::vector<bool> set(n, false);
    for (Vertex v : members)
        set[v] = true;
    return set;
}

} // namespace

TEST_CASE("empty prune set reduces to plain dijkstra")
{
    WeightedGraph g = random_connected(31, 40, 20);
    auto entries = dist_and_prune(g, 0, prune_set(40, {}));
    auto dist = dijkstra(g, 0);
    for (Vertex v = 0; v < 40; ++v)
    {
        CHECK(entries[v].d == dist[v]);
        CHECK_FALSE(entries[v].p);
    }
}

TEST_CASE("forced path through the prune set")
{
    // r(0) - m(1) - u(2)
    WeightedGraph g(3, {{0, 1, 2}, {1, 2, 3}});
    auto entries = dist_and_prune(g, 0, prune_set(3, {1}));
    CHECK(entries[2] == DistPruneEntry{5, true});
    CHECK(entries[1] == DistPruneEntry{2, true});
    CHECK(entries[0] == DistPruneEntry{0, false});
}

TEST_CASE("equal-length paths resolve toward pruned")
{
    // diamond: 0-1-3 and 0-2-3, both length 2; 1 is in the prune set
    WeightedGraph g(4, {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}});
    auto entries = dist_and_prune(g, 0, prune_set(4, {1}));
    CHECK(entries[3] == DistPruneEntry{2, true});
    CHECK(entries[2] == DistPruneEntry{1, false});
}

TEST_CASE("p flag matches the distance characterization")
{
    // p(u) is exact: true iff some prune vertex splits a shortest root-u path
    for (uint64_t seed : {7u, 8u, 9u})
    {
        WeightedGraph g = random_connected(seed, 12, 4, 1.5);
        std::vector<std::vector<Distance>> all;
        for (Vertex v = 0; v < 12; ++v)
            all.push_back(dijkstra(g, v));
        std::vector<bool> prune = prune_set(12, {3, 5, 8});
        for (Vertex root = 0; root < 12; ++root)
        {
            if (prune[root])
                continue;
            auto entries = dist_and_prune(g, root, prune);
            for (Vertex u = 0; u < 12; ++u)
            {
                bool expected = false;
                for (Vertex m : {3, 5, 8})
                    expected |= all[root][m] + all[m][u] == all[root][u];
                CHECK(entries[u].p == expected);
            }
        }
    }
}

TEST_CASE("rank_cut orders by pruneability count")
{
    SUBCASE("singleton cut")
    {
        WeightedGraph g(3, {{0, 1, 1}, {1, 2, 1}});
        CutRanking ranking = rank_cut(g, {1});
        CHECK(ranking.order == std::vector<Vertex>{1});
        CHECK(ranking.prune_counts == std::vector<uint32_t>{0});
    }
    SUBCASE("counts match the brute-force definition")
    {
        for (uint64_t seed : {21u, 22u})
        {
            WeightedGraph g = random_connected(seed, 30, 10);
            std::vector<Vertex> cut{2, 11, 17, 25};
            std::vector<std::vector<Distance>> from_cut;
            for (Vertex c : cut)
                from_cut.push_back(dijkstra(g, c));
            CutRanking ranking = rank_cut(g, cut);
            for (size_t i = 0; i < ranking.order.size(); ++i)
            {
                Vertex v = ranking.order[i];
                size_t vi = std::find(cut.begin(), cut.end(), v) - cut.begin();
                uint32_t expected = 0;
                for (Vertex u = 0; u < g.vertex_count(); ++u)
                {
                    bool split = false;
                    for (size_t j = 0; j < cut.size(); ++j)
                        if (j != vi)
                            split |= from_cut[vi][cut[j]] + from_cut[j][u] == from_cut[vi][u];
                    expected += split;
                }
                CHECK(ranking.prune_counts[i] == expected);
            }
            for (size_t i = 1; i < ranking.prune_counts.size(); ++i)
                CHECK(ranking.prune_counts[i - 1] <= ranking.prune_counts[i]);
        }
    }
}

TEST_CASE("label store accounting")
{
    LabelStore store;
    store.arrays = {{{1, 2, 3}, {4}}, {{5, 6}}};
    CHECK(store.entry_count() == 6);
    CHECK(store.byte_size() == 2 * 4 + 3 * 4 + 6 * 4);
}
