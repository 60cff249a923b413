#include "hc2l/index.hpp"

#include <stdexcept>

namespace hc2l {

namespace {

// distance over the label arrays at the LCA level of two core vertices
Distance core_query(const DistanceIndex &idx, Vertex cs, Vertex ct, QueryStats *stats)
{
    if (cs == ct)
        return 0;
    uint32_t level = lca_level(idx.hierarchy.vertex_node[cs], idx.hierarchy.vertex_node[ct]);
    const auto &a = idx.labels.arrays[cs][level];
    const auto &b = idx.labels.arrays[ct][level];
    size_t overlap = std::min(a.size(), b.size());
    if (stats)
        stats->scanned_positions += overlap;
    Distance best = INFINITE_DISTANCE;
    for (size_t j = 0; j < overlap; ++j)
    {
        if (a[j] == LABEL_INFINITY || b[j] == LABEL_INFINITY)
            continue;
        best = std::min(best, Distance{a[j]} + Distance{b[j]});
    }
    return best;
}

} // namespace

Distance query(const DistanceIndex &idx, Vertex s, Vertex t, QueryStats *stats)
{
    if (s >= idx.original_vertex_count || t >= idx.original_vertex_count)
        throw std::out_of_range("query vertex id out of range");
    if (stats)
        ++stats->queries;
    if (s == t)
        return 0;

    const Contraction &c = idx.contraction;
    if (c.removed(s) && c.removed(t) && c.record(s).root == c.record(t).root)
        return c.pair_distance(s, t);

    // route contracted endpoints to their roots; every path out of a peeled
    // tree crosses its root
    Distance offset = 0;
    Vertex s_core = s, t_core = t;
    if (c.removed(s))
    {
        offset += c.record(s).dist_to_root;
        s_core = c.record(s).root;
    }
    if (c.removed(t))
    {
        offset += c.record(t).dist_to_root;
        t_core = c.record(t).root;
    }
    return safe_sum(core_query(idx, c.core_id[s_core], c.core_id[t_core], stats), offset);
}

std::vector<Distance> batch_query(const DistanceIndex &idx, const std::vector<std::pair<Vertex, Vertex>> &pairs,
                                  QueryStats *stats)
{
    std::vector<Distance> result;
    result.reserve(pairs.size());
    for (auto [s, t] : pairs)
        result.push_back(query(idx, s, t, stats));
    return result;
}

} // namespace hc2l
