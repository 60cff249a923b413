#pragma once

#include "hc2l/graph.hpp"

#include <vector>

namespace hc2l {

// rough three-way split: two seed partitions joined by a cut region
struct RoughPartition
{
    std::vector<Vertex> p_a;
    std::vector<Vertex> region;
    std::vector<Vertex> p_b;
};

struct CutResult
{
    std::vector<Vertex> p_a;
    std::vector<Vertex> cut; // provisional order: ascending id
    std::vector<Vertex> p_b;
};

// seed two far-apart vertices, split by partition weight
// pw(v) = d(vA,v) - d(vB,v), and peel bottleneck equivalence classes
RoughPartition balanced_partition(const WeightedGraph &g, Beta beta);

// rough partition + minimum s-t vertex cut in the cut region; evaluates the
// source-side and sink-side cuts and keeps the more balanced result
CutResult balanced_cut(const WeightedGraph &g, Beta beta);

// provisional deterministic cut order (ascending id)
std::vector<Vertex> order_cut(std::vector<Vertex> cut);

} // namespace hc2l
