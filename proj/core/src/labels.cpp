#include "hc2l/labels.hpp"

#include <algorithm>
#include <queue>

namespace hc2l {

std::vector<DistPruneEntry> dist_and_prune(const WeightedGraph &g, Vertex root, const std::vector<bool> &prune_set)
{
    std::vector<DistPruneEntry> result(g.vertex_count());
    std::vector<bool> settled(g.vertex_count(), false);

    // queue ordered by (d, p) with pruned entries first among equal distances
    struct Entry
    {
        Distance d;
        bool p;
        Vertex v;
        bool operator>(const Entry &o) const
        {
            if (d != o.d)
                return d > o.d;
            return !p && o.p;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    queue.push({0, prune_set[root], root});
    while (!queue.empty())
    {
        auto [d, p, v] = queue.top();
        queue.pop();
        if (settled[v])
            continue;
        settled[v] = true;
        result[v] = {d, p};
        for (const Edge &e : g.neighbors(v))
            if (!settled[e.to])
                queue.push({d + e.weight, p || prune_set[e.to], e.to});
    }
    return result;
}

CutRanking rank_cut(const WeightedGraph &g, const std::vector<Vertex> &cut)
{
    std::vector<bool> in_cut(g.vertex_count(), false);
    for (Vertex c : cut)
        in_cut[c] = true;

    struct Ranked
    {
        uint32_t count;
        Vertex v;
        std::vector<bool> pruned;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(cut.size());
    for (Vertex c : cut)
    {
        in_cut[c] = false; // prune against the rest of the cut
        auto entries = dist_and_prune(g, c, in_cut);
        in_cut[c] = true;
        uint32_t count = 0;
        std::vector<bool> pruned(g.vertex_count(), false);
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            if (entries[u].p)
            {
                pruned[u] = true;
                ++count;
            }
        ranked.push_back({count, c, std::move(pruned)});
    }
    std::sort(ranked.begin(), ranked.end(), [](const Ranked &a, const Ranked &b) {
        if (a.count != b.count)
            return a.count < b.count;
        return a.v < b.v;
    });

    CutRanking result;
    for (Ranked &r : ranked)
    {
        result.order.push_back(r.v);
        result.prune_counts.push_back(r.count);
        result.full_cut_pruned.push_back(std::move(r.pruned));
    }
    return result;
}

size_t LabelStore::entry_count() const
{
    size_t count = 0;
    for (const auto &levels : arrays)
        for (const auto &values : levels)
            count += values.size();
    return count;
}

size_t LabelStore::byte_size() const
{
    size_t bytes = 0;
    for (const auto &levels : arrays)
    {
        bytes += sizeof(uint32_t); // level count
        for (const auto &values : levels)
            bytes += sizeof(uint32_t) * (1 + values.size()); // length + values
    }
    return bytes;
}

} // namespace hc2l
