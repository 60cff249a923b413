#pragma once

#include "hc2l/graph.hpp"

#include <vector>

namespace hc2l {

// Node-split flow network for minimum s-t vertex cut: each region vertex v
// becomes v_in -> v_out with an inner arc of capacity one; undirected region
// edges become a pair of outer arcs (u_out -> v_in, v_out -> u_in) whose
// capacity is finite but never binding.
class FlowGraph
{
public:
    FlowGraph(const WeightedGraph &region, std::vector<Vertex> source_attach, std::vector<Vertex> sink_attach);

    // total maximum flow; phases = level-graph rounds (for complexity checks)
    uint32_t max_flow();
    uint32_t flow_value() const { return flow_value_; }
    uint32_t phase_count() const { return phases_; }

    Vertex region_size() const { return region_size_; }
    const std::vector<Vertex> &source_attach() const { return source_attach_; }
    const std::vector<Vertex> &sink_attach() const { return sink_attach_; }

    // residual-reachability cut extraction; requires max_flow() run first
    std::vector<Vertex> source_side_cut() const;
    std::vector<Vertex> sink_side_cut() const;

    // true when removing `cut` from the region disconnects every source
    // attachment vertex from every sink attachment vertex
    bool is_separator(const std::vector<Vertex> &cut) const;

private:
    struct Arc
    {
        uint32_t to;
        uint32_t rev; // index of the reverse arc in arcs_[to]
        uint32_t cap;
    };

    uint32_t in_node(Vertex v) const { return 2 * v; }
    uint32_t out_node(Vertex v) const { return 2 * v + 1; }
    uint32_t source_node() const { return 2 * region_size_; }
    uint32_t sink_node() const { return 2 * region_size_ + 1; }

    void add_arc(uint32_t from, uint32_t to, uint32_t cap);
    bool build_levels();
    uint32_t push_blocking(uint32_t node, uint32_t limit);
    std::vector<bool> residual_reachable_forward() const;
    std::vector<bool> residual_reachable_backward() const;

    Vertex region_size_;
    std::vector<std::vector<Arc>> arcs_;
    std::vector<Vertex> source_attach_, sink_attach_;
    std::vector<uint32_t> level_, current_arc_;
    const WeightedGraph *region_; // for separator checks
    uint32_t flow_value_ = 0;
    uint32_t phases_ = 0;
};

struct VertexCutPair
{
    std::vector<Vertex> s_side_cut;
    std::vector<Vertex> t_side_cut;
    uint32_t flow_value;
};

// convenience wrapper: build, solve, extract and verify both cuts
VertexCutPair min_vertex_cut(const WeightedGraph &region, std::vector<Vertex> source_attach,
                             std::vector<Vertex> sink_attach);

} // namespace hc2l
