#pragma once

#include "hc2l/graph.hpp"

#include <string>
#include <vector>

namespace hc2l::testing {

struct CorpusGraph
{
    std::string name;
    WeightedGraph graph;
};

// connected: random spanning tree plus extra edges
WeightedGraph random_connected(uint64_t seed, Vertex n, Weight max_weight, double extra_edge_factor = 1.0);

WeightedGraph grid_graph(uint32_t rows, uint32_t cols, Weight weight = 1);

WeightedGraph random_tree(uint64_t seed, Vertex n, Weight max_weight);

// random core with degree-one chains and leaves hanging off it
WeightedGraph fringe_graph(uint64_t seed);

// fixed acceptance corpus: 30 random connected graphs (n in [20,300],
// weights 1..1000), a 16x16 unit grid, a tree, and a fringe graph
const std::vector<CorpusGraph> &corpus();

// corpus members with at most max_n vertices
std::vector<const CorpusGraph *> corpus_up_to(Vertex max_n);

} // namespace hc2l::testing
