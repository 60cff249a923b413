#include "hc2l/contraction.hpp"

#include <cassert>
#include <queue>

namespace hc2l {

Distance Contraction::pair_distance(Vertex v, Vertex w) const
{
    if (v == w)
        return 0;
    auto depth_of = [this](Vertex x) { return removed(x) ? record(x).depth : 0; };
    auto lift = [this](Vertex &x, Distance &offset) {
        const ContractionRecord &r = record(x);
        offset += r.dist_to_parent;
        x = r.parent;
    };
    Distance off_v = 0, off_w = 0;
    uint32_t dv = depth_of(v), dw = depth_of(w);
    while (dv > dw)
    {
        lift(v, off_v);
        --dv;
    }
    while (dw > dv)
    {
        lift(w, off_w);
        --dw;
    }
    while (v != w)
    {
        assert(dv > 0 && "pair_distance requires a common contraction root");
        lift(v, off_v);
        lift(w, off_w);
        --dv;
    }
    return off_v + off_w;
}

Contraction identity_contraction(const WeightedGraph &g)
{
    Contraction c;
    c.core = g;
    c.core_id.resize(g.vertex_count());
    c.core_to_original.resize(g.vertex_count());
    c.record_index.assign(g.vertex_count(), NO_CORE_ID);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
    {
        c.core_id[v] = v;
        c.core_to_original[v] = v;
    }
    return c;
}

Contraction contract_degree_one(const WeightedGraph &g)
{
    const Vertex n = g.vertex_count();
    if (n < 2)
        return identity_contraction(g);

    std::vector<uint32_t> degree(n);
    std::vector<bool> removed(n, false);
    std::queue<Vertex> pending;
    for (Vertex v = 0; v < n; ++v)
    {
        degree[v] = static_cast<uint32_t>(g.degree(v));
        if (degree[v] == 1)
            pending.push(v);
    }

    Contraction c;
    c.core_id.assign(n, NO_CORE_ID);
    c.record_index.assign(n, NO_CORE_ID);

    while (!pending.empty())
    {
        Vertex v = pending.front();
        pending.pop();
        if (removed[v] || degree[v] != 1)
            continue;
        removed[v] = true;
        for (const Edge &e : g.neighbors(v))
        {
            if (removed[e.to])
                continue;
            c.record_index[v] = static_cast<uint32_t>(c.records.size());
            c.records.push_back({v, 0, e.to, e.weight, 0, 0});
            if (--degree[e.to] == 1)
                pending.push(e.to);
            break;
        }
    }

    // core graph over survivors
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v])
        {
            c.core_id[v] = static_cast<uint32_t>(c.core_to_original.size());
            c.core_to_original.push_back(v);
        }
    std::vector<std::tuple<Vertex, Vertex, Weight>> core_edges;
    for (auto [u, v, w] : g.edges())
        if (!removed[u] && !removed[v])
            core_edges.emplace_back(c.core_id[u], c.core_id[v], w);
    c.core = WeightedGraph(static_cast<Vertex>(c.core_to_original.size()), std::move(core_edges));

    // resolve root, depth and accumulated distance along each parent chain
    std::vector<Vertex> chain;
    for (ContractionRecord &seed : c.records)
    {
        if (seed.depth != 0)
            continue; // already resolved as part of a longer chain
        chain.clear();
        Vertex x = seed.vertex;
        while (removed[x] && c.records[c.record_index[x]].depth == 0 &&
               removed[c.records[c.record_index[x]].parent])
        {
            chain.push_back(x);
            x = c.records[c.record_index[x]].parent;
        }
        // x is either resolved or its parent is a core vertex
        chain.push_back(x);
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        {
            ContractionRecord &r = c.records[c.record_index[*it]];
            if (removed[r.parent])
            {
                const ContractionRecord &p = c.records[c.record_index[r.parent]];
                r.root = p.root;
                r.depth = p.depth + 1;
                r.dist_to_root = p.dist_to_root + r.dist_to_parent;
            }
            else
            {
                r.root = r.parent;
                r.depth = 1;
                r.dist_to_root = r.dist_to_parent;
            }
        }
    }
    return c;
}

} // namespace hc2l
