#include "hc2l/hierarchy.hpp"

#include <algorithm>

namespace hc2l {

uint32_t Hierarchy::height() const
{
    uint32_t h = 0;
    for (const HierarchyNode &node : nodes)
        h = std::max(h, node_depth(node.id));
    return h;
}

uint32_t Hierarchy::max_cut_size() const
{
    size_t m = 0;
    for (const HierarchyNode &node : nodes)
        m = std::max(m, node.cut.size());
    return static_cast<uint32_t>(m);
}

uint32_t Hierarchy::find_node(NodeId id) const
{
    if (nodes.empty())
        return NO_NODE;
    uint32_t index = 0;
    for (uint32_t depth = 0; depth < node_depth(id); ++depth)
    {
        bool right = (node_path(id) >> (63 - depth)) & 1;
        index = right ? nodes[index].right : nodes[index].left;
        if (index == NO_NODE)
            return NO_NODE;
    }
    return index;
}

} // namespace hc2l
