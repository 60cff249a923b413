#pragma once

#include "hc2l/graph.hpp"

#include <vector>

namespace hc2l {

// extra border-to-border edge restoring distance preservation inside a partition
struct Shortcut
{
    Vertex b1;
    Vertex b2; // b1 < b2
    Weight weight;

    bool operator==(const Shortcut &) const = default;
};

// partition vertices adjacent to at least one cut vertex, ascending id
std::vector<Vertex> border_vertices(const WeightedGraph &parent, const std::vector<Vertex> &cut,
                                    const std::vector<Vertex> &part);

// Add the non-redundant shortcuts that make G[part] distance-preserving
// w.r.t. the parent graph. cut_distances[i] must hold exact parent-graph
// distances from cut[i] to every parent vertex (reused from the label
// searches at this node). Output ordered (b1, b2) lexicographically.
std::vector<Shortcut> add_shortcuts(const WeightedGraph &parent, const std::vector<Vertex> &cut,
                                    const std::vector<std::vector<Distance>> &cut_distances,
                                    const std::vector<Vertex> &part);

} // namespace hc2l
