#pragma once

#include "hc2l/types.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace hc2l {

struct Edge
{
    Vertex to;
    Weight weight;

    bool operator==(const Edge &) const = default;
};

// Undirected graph with positive integer edge weights.
// Immutable after construction; self-loops are dropped and parallel edges
// collapse to the minimum weight.
class WeightedGraph
{
public:
    WeightedGraph() = default;
    WeightedGraph(Vertex vertex_count, std::vector<std::tuple<Vertex, Vertex, Weight>> edges);

    Vertex vertex_count() const { return static_cast<Vertex>(adjacency_.size()); }
    size_t edge_count() const { return edge_count_; }

    std::span<const Edge> neighbors(Vertex v) const { return adjacency_[v]; }
    size_t degree(Vertex v) const { return adjacency_[v].size(); }

    // sorted canonical edge list (u < v)
    std::vector<std::tuple<Vertex, Vertex, Weight>> edges() const;

private:
    std::vector<std::vector<Edge>> adjacency_;
    size_t edge_count_ = 0;
};

struct ParseError : std::runtime_error
{
    size_t line;
    ParseError(size_t line_number, const std::string &what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what), line(line_number)
    {
    }
};

// DIMACS ssp format: "c ..." comments, "p sp <n> <m>", "a <u> <v> <w>" with 1-based ids
WeightedGraph parse_dimacs(std::istream &in);
WeightedGraph parse_dimacs_file(const std::string &path);

// single-source shortest path distances; unreachable = INFINITE_DISTANCE
std::vector<Distance> dijkstra(const WeightedGraph &g, Vertex source);

// restricted to vertices with active[v] = true (source assumed active)
std::vector<Distance> dijkstra(const WeightedGraph &g, Vertex source, const std::vector<bool> &active);

// vertex sets sorted by decreasing size, ties by smallest contained id;
// vertices within each component ascending
std::vector<std::vector<Vertex>> connected_components(const WeightedGraph &g);

// content hash over vertex count and the sorted edge list
uint64_t graph_fingerprint(const WeightedGraph &g);

} // namespace hc2l
