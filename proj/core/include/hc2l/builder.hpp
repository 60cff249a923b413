#pragma once

#include "hc2l/index.hpp"
#include "hc2l/partition.hpp"
#include "hc2l/shortcut.hpp"

#include <functional>

namespace hc2l {

// observation hook for tests and diagnostics: one call per finished
// hierarchy node, before recursing into children. All ids are local to
// `graph`; to_core maps them back to core vertex ids.
struct NodeSnapshot
{
    NodeId id;
    const WeightedGraph &graph; // shortcut-enhanced node subgraph
    const std::vector<Vertex> &to_core;
    const std::vector<Vertex> &cut;                       // rank order
    const std::vector<std::vector<Vertex>> &parts;        // child vertex sets, left first
    const std::vector<std::vector<Shortcut>> &shortcuts;  // per child
    const std::vector<WeightedGraph> &child_graphs;       // per child, child-local ids
};

struct BuildOptions
{
    Beta beta;
    uint32_t leaf_size = 1;
    uint32_t threads = 1;
    bool tail_pruning = true;
    bool contraction = true;
    // called from worker threads when threads > 1; must be thread-safe then
    std::function<void(const NodeSnapshot &)> node_observer;
};

struct BuildStats
{
    uint32_t original_vertices = 0;
    size_t original_edges = 0;
    uint32_t core_vertices = 0;
    size_t core_edges = 0;
    uint32_t height = 0;
    uint32_t max_cut = 0;
    size_t entry_count = 0;
    size_t label_bytes = 0;
    size_t shortcut_count = 0;
    size_t naive_upper_bound = 0;     // all ancestor-cut entries
    size_t cut_cover_lower_bound = 0; // entries no other cut vertex covers
};

struct BuildResult
{
    DistanceIndex index;
    BuildStats stats;
};

BuildResult build_index(const WeightedGraph &g, const BuildOptions &options);

} // namespace hc2l
