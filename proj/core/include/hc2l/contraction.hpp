#pragma once

#include "hc2l/graph.hpp"

#include <vector>

namespace hc2l {

// one peeled degree-one vertex; parent points toward the surviving core
struct ContractionRecord
{
    Vertex vertex;
    Vertex root;   // nearest surviving core vertex (original id)
    Vertex parent; // next vertex on the path to root (original id)
    Distance dist_to_parent;
    Distance dist_to_root;
    uint32_t depth; // root has depth 0

    bool operator==(const ContractionRecord &) const = default;
};

constexpr uint32_t NO_CORE_ID = std::numeric_limits<uint32_t>::max();

struct Contraction
{
    WeightedGraph core;
    std::vector<ContractionRecord> records;   // one per removed vertex
    std::vector<uint32_t> core_id;            // original id -> core id, NO_CORE_ID if removed
    std::vector<Vertex> core_to_original;     // core id -> original id
    std::vector<uint32_t> record_index;       // original id -> index into records, NO_CORE_ID if core

    bool removed(Vertex v) const { return core_id[v] == NO_CORE_ID; }
    const ContractionRecord &record(Vertex v) const { return records[record_index[v]]; }

    // exact distance for two vertices hanging off the same contraction root,
    // via their lowest common ancestor in the peeled tree; no graph search
    Distance pair_distance(Vertex v, Vertex w) const;
};

// repeatedly peel vertices of current degree 1; every component keeps at
// least one vertex. Identity contraction (empty records) for tiny inputs.
Contraction contract_degree_one(const WeightedGraph &g);

// identity contraction used when peeling is disabled
Contraction identity_contraction(const WeightedGraph &g);

} // namespace hc2l
