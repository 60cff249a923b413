#pragma once

#include "hc2l/graph.hpp"

#include <vector>

namespace hc2l {

struct DistPruneEntry
{
    Distance d = INFINITE_DISTANCE;
    // true iff some shortest path from the search root runs through the
    // prune set (the settled vertex itself counts)
    bool p = false;

    bool operator==(const DistPruneEntry &) const = default;
};

// Dijkstra with pruneability tracking; among equal distances the pruned
// settlement wins, so p is exact
std::vector<DistPruneEntry> dist_and_prune(const WeightedGraph &g, Vertex root, const std::vector<bool> &prune_set);

struct CutRanking
{
    std::vector<Vertex> order;          // cut vertices ascending by (prune count, id)
    std::vector<uint32_t> prune_counts; // aligned with order
    // per cut position (rank order), per vertex: p-flag of the search against
    // the full remaining cut; feeds the cut-cover lower bound
    std::vector<std::vector<bool>> full_cut_pruned;
};

// rank each cut vertex by how many vertices it is prunable for (search
// against the rest of the cut); low counts first
CutRanking rank_cut(const WeightedGraph &g, const std::vector<Vertex> &cut);

// Per core vertex: one distance array per hierarchy level 0..level(v), tail
// truncated. Hubs are positional; only distance values are stored.
struct LabelStore
{
    std::vector<std::vector<std::vector<uint32_t>>> arrays; // [vertex][level][pos]

    size_t entry_count() const;
    size_t byte_size() const; // values + per-array length bookkeeping
};

} // namespace hc2l
