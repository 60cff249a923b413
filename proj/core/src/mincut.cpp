#include "hc2l/mincut.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace hc2l {

FlowGraph::FlowGraph(const WeightedGraph &region, std::vector<Vertex> source_attach, std::vector<Vertex> sink_attach)
    : region_size_(region.vertex_count()),
      arcs_(2 * region.vertex_count() + 2),
      source_attach_(std::move(source_attach)),
      sink_attach_(std::move(sink_attach)),
      region_(&region)
{
    // finite stand-in for unbounded capacity: one more than the number of
    // inner arcs bounds any feasible flow
    const uint32_t unbounded = region_size_ + 1;
    for (Vertex v = 0; v < region_size_; ++v)
        add_arc(in_node(v), out_node(v), 1);
    for (Vertex u = 0; u < region_size_; ++u)
        for (const Edge &e : region.neighbors(u))
            if (u < e.to)
            {
                add_arc(out_node(u), in_node(e.to), unbounded);
                add_arc(out_node(e.to), in_node(u), unbounded);
            }
    for (Vertex v : source_attach_)
        add_arc(source_node(), in_node(v), unbounded);
    for (Vertex v : sink_attach_)
        add_arc(out_node(v), sink_node(), unbounded);
}

void FlowGraph::add_arc(uint32_t from, uint32_t to, uint32_t cap)
{
    arcs_[from].push_back({to, static_cast<uint32_t>(arcs_[to].size()), cap});
    arcs_[to].push_back({from, static_cast<uint32_t>(arcs_[from].size() - 1), 0});
}

bool FlowGraph::build_levels()
{
    level_.assign(arcs_.size(), UINT32_MAX);
    std::queue<uint32_t> queue;
    level_[source_node()] = 0;
    queue.push(source_node());
    while (!queue.empty())
    {
        uint32_t node = queue.front();
        queue.pop();
        for (const Arc &a : arcs_[node])
            if (a.cap > 0 && level_[a.to] == UINT32_MAX)
            {
                level_[a.to] = level_[node] + 1;
                queue.push(a.to);
            }
    }
    return level_[sink_node()] != UINT32_MAX;
}

uint32_t FlowGraph::push_blocking(uint32_t node, uint32_t limit)
{
    if (node == sink_node() || limit == 0)
        return limit;
    uint32_t pushed = 0;
    for (uint32_t &i = current_arc_[node]; i < arcs_[node].size(); ++i)
    {
        Arc &a = arcs_[node][i];
        if (a.cap == 0 || level_[a.to] != level_[node] + 1)
            continue;
        uint32_t got = push_blocking(a.to, std::min(limit - pushed, a.cap));
        if (got == 0)
            continue;
        a.cap -= got;
        arcs_[a.to][a.rev].cap += got;
        pushed += got;
        if (pushed == limit)
            return pushed;
    }
    return pushed;
}

uint32_t FlowGraph::max_flow()
{
    while (build_levels())
    {
        ++phases_;
        current_arc_.assign(arcs_.size(), 0);
        flow_value_ += push_blocking(source_node(), UINT32_MAX);
    }
    return flow_value_;
}

std::vector<bool> FlowGraph::residual_reachable_forward() const
{
    std::vector<bool> seen(arcs_.size(), false);
    std::vector<uint32_t> stack{source_node()};
    seen[source_node()] = true;
    while (!stack.empty())
    {
        uint32_t node = stack.back();
        stack.pop_back();
        for (const Arc &a : arcs_[node])
            if (a.cap > 0 && !seen[a.to])
            {
                seen[a.to] = true;
                stack.push_back(a.to);
            }
    }
    return seen;
}

std::vector<bool> FlowGraph::residual_reachable_backward() const
{
    // nodes that can reach T along residual arcs
    std::vector<bool> seen(arcs_.size(), false);
    std::vector<uint32_t> stack{sink_node()};
    seen[sink_node()] = true;
    while (!stack.empty())
    {
        uint32_t node = stack.back();
        stack.pop_back();
        // a.to -> node has residual capacity iff the reverse arc at a.to does
        for (const Arc &a : arcs_[node])
            if (arcs_[a.to][a.rev].cap > 0 && !seen[a.to])
            {
                seen[a.to] = true;
                stack.push_back(a.to);
            }
    }
    return seen;
}

std::vector<Vertex> FlowGraph::source_side_cut() const
{
    std::vector<bool> reach = residual_reachable_forward();
    std::vector<Vertex> cut;
    for (Vertex v = 0; v < region_size_; ++v)
        if (reach[in_node(v)] && !reach[out_node(v)])
            cut.push_back(v);
    return cut;
}

std::vector<Vertex> FlowGraph::sink_side_cut() const
{
    std::vector<bool> reach = residual_reachable_backward();
    std::vector<Vertex> cut;
    for (Vertex v = 0; v < region_size_; ++v)
        if (reach[out_node(v)] && !reach[in_node(v)])
            cut.push_back(v);
    return cut;
}

bool FlowGraph::is_separator(const std::vector<Vertex> &cut) const
{
    std::vector<bool> blocked(region_size_, false);
    for (Vertex v : cut)
        blocked[v] = true;
    std::vector<bool> is_sink(region_size_, false);
    for (Vertex v : sink_attach_)
    {
        if (!blocked[v])
            is_sink[v] = true;
    }
    std::vector<bool> seen(region_size_, false);
    std::vector<Vertex> stack;
    for (Vertex v : source_attach_)
        if (!blocked[v])
        {
            if (is_sink[v])
                return false; // attached to both terminals and not removed
            seen[v] = true;
            stack.push_back(v);
        }
    while (!stack.empty())
    {
        Vertex v = stack.back();
        stack.pop_back();
        for (const Edge &e : region_->neighbors(v))
        {
            if (blocked[e.to] || seen[e.to])
                continue;
            if (is_sink[e.to])
                return false;
            seen[e.to] = true;
            stack.push_back(e.to);
        }
    }
    return true;
}

VertexCutPair min_vertex_cut(const WeightedGraph &region, std::vector<Vertex> source_attach,
                             std::vector<Vertex> sink_attach)
{
    FlowGraph fg(region, std::move(source_attach), std::move(sink_attach));
    fg.max_flow();
    VertexCutPair result{fg.source_side_cut(), fg.sink_side_cut(), fg.flow_value()};
    if (!fg.is_separator(result.s_side_cut) || !fg.is_separator(result.t_side_cut))
        throw std::logic_error("extracted vertex cut is not a separator");
    assert(result.s_side_cut.size() == result.flow_value);
    assert(result.t_side_cut.size() == result.flow_value);
    return result;
}

} // namespace hc2l
