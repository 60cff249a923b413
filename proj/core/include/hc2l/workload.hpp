#pragma once

#include "hc2l/index.hpp"

#include <vector>

namespace hc2l {

struct BenchConfig
{
    enum class Mode
    {
        random_pairs,
        distance_buckets
    };
    Mode mode = Mode::random_pairs;
    size_t pair_count = 1000000;  // random_pairs
    uint32_t bucket_count = 10;   // distance_buckets
    size_t per_bucket = 10000;
    Distance l_min = 1000;
    uint64_t seed = 0;
};

struct Workload
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    // distance_buckets: bucket i covers (boundaries[i], boundaries[i+1]]
    std::vector<Distance> boundaries;
    std::vector<size_t> bucket_of; // aligned with pairs
    std::vector<size_t> bucket_fill;
    std::vector<size_t> bucket_shortfall; // pairs missing after the attempt cap
    size_t unreachable = 0;               // random_pairs only
    Distance l_max = 0;
};

// geometric bucket boundaries l_min * x^i with x = (l_max/l_min)^(1/buckets)
std::vector<Distance> bucket_boundaries(Distance l_min, Distance l_max, uint32_t buckets);

// reproducible under fixed seed; l_max estimated by a double sweep of index
// queries (farthest from vertex 0, then farthest from there)
Workload generate_workload(const DistanceIndex &idx, const BenchConfig &cfg);

} // namespace hc2l
