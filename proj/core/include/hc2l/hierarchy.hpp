#pragma once

#include "hc2l/types.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace hc2l {

// Tree-node identifier packed into one word: the root-to-node path occupies
// the high 58 bits left-aligned (0 = left child, 1 = right child), the path
// length lives in the low 6 bits.
using NodeId = uint64_t;

constexpr uint32_t MAX_HIERARCHY_DEPTH = 58;
constexpr NodeId ROOT_NODE_ID = 0;

constexpr uint32_t node_depth(NodeId id)
{
    return static_cast<uint32_t>(id & 0x3F);
}

constexpr uint64_t node_path(NodeId id)
{
    return id & ~uint64_t{0x3F};
}

constexpr NodeId child_node_id(NodeId id, bool right)
{
    uint32_t depth = node_depth(id);
    uint64_t path = node_path(id);
    if (right)
        path |= uint64_t{1} << (63 - depth);
    return path | (depth + 1);
}

// depth of the lowest common ancestor: leading zeros of the XORed paths,
// capped by both path lengths
constexpr uint32_t lca_level(NodeId a, NodeId b)
{
    uint64_t diff = node_path(a) ^ node_path(b);
    uint32_t common = diff == 0 ? 64 : static_cast<uint32_t>(std::countl_zero(diff));
    return std::min({node_depth(a), node_depth(b), common});
}

// ancestor of id at the given depth (prefix truncation)
constexpr NodeId node_at_level(NodeId id, uint32_t level)
{
    uint64_t mask = level == 0 ? 0 : ~uint64_t{0} << (64 - level);
    return (node_path(id) & mask) | level;
}

constexpr uint32_t NO_NODE = std::numeric_limits<uint32_t>::max();

struct HierarchyNode
{
    NodeId id = ROOT_NODE_ID;
    std::vector<Vertex> cut;   // rank order; for leaves, ascending id
    uint32_t left = NO_NODE;   // indices into Hierarchy::nodes
    uint32_t right = NO_NODE;
    uint32_t subtree_size = 0; // vertices mapped to this node or below

    bool is_leaf() const { return left == NO_NODE && right == NO_NODE; }
};

struct Hierarchy
{
    std::vector<HierarchyNode> nodes; // preorder, nodes[0] = root
    std::vector<NodeId> vertex_node;  // core vertex -> node holding it
    std::vector<uint32_t> vertex_pos; // position within that node's cut
    Beta beta;

    uint32_t height() const; // max node depth
    uint32_t max_cut_size() const;

    // walk the path bits from the root; NO_NODE when absent
    uint32_t find_node(NodeId id) const;
};

} // namespace hc2l
