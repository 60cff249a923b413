#pragma once

#include "hc2l/contraction.hpp"
#include "hc2l/hierarchy.hpp"
#include "hc2l/labels.hpp"

#include <vector>

namespace hc2l {

struct DistanceIndex
{
    uint32_t original_vertex_count = 0;
    Contraction contraction; // core graph, peel records, id maps
    Hierarchy hierarchy;     // over core vertex ids
    LabelStore labels;       // per core vertex
    Beta beta;
    bool tail_pruning = true;
    bool contraction_enabled = true;
    uint64_t fingerprint = 0; // of the source graph
};

struct QueryStats
{
    uint64_t scanned_positions = 0; // label positions examined
    uint64_t queries = 0;
};

// exact d_G(s,t) over original vertex ids; INFINITE_DISTANCE when disconnected
Distance query(const DistanceIndex &idx, Vertex s, Vertex t, QueryStats *stats = nullptr);

std::vector<Distance> batch_query(const DistanceIndex &idx, const std::vector<std::pair<Vertex, Vertex>> &pairs,
                                  QueryStats *stats = nullptr);

} // namespace hc2l
