#include "hc2l/workload.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace hc2l {

namespace {

Vertex farthest_by_query(const DistanceIndex &idx, Vertex from)
{
    Vertex best = from;
    Distance best_dist = 0;
    for (Vertex t = 0; t < idx.original_vertex_count; ++t)
    {
        Distance d = query(idx, from, t);
        if (d != INFINITE_DISTANCE && d > best_dist)
        {
            best_dist = d;
            best = t;
        }
    }
    return best;
}

Distance estimate_l_max(const DistanceIndex &idx)
{
    Vertex v_a = farthest_by_query(idx, 0);
    Distance l_max = 0;
    for (Vertex t = 0; t < idx.original_vertex_count; ++t)
    {
        Distance d = query(idx, v_a, t);
        if (d != INFINITE_DISTANCE)
            l_max = std::max(l_max, d);
    }
    return l_max;
}

} // namespace

std::vector<Distance> bucket_boundaries(Distance l_min, Distance l_max, uint32_t buckets)
{
    std::vector<Distance> bounds(buckets + 1);
    bounds[0] = l_min;
    double x = std::pow(static_cast<double>(l_max) / static_cast<double>(l_min), 1.0 / buckets);
    for (uint32_t i = 1; i < buckets; ++i)
        bounds[i] = static_cast<Distance>(std::llround(static_cast<double>(l_min) * std::pow(x, i)));
    bounds[buckets] = l_max; // pin the top exactly
    return bounds;
}

Workload generate_workload(const DistanceIndex &idx, const BenchConfig &cfg)
{
    const Vertex n = idx.original_vertex_count;
    if (n < 2)
        throw std::invalid_argument("workload needs at least two vertices");

    Workload w;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);

    if (cfg.mode == BenchConfig::Mode::random_pairs)
    {
        w.pairs.reserve(cfg.pair_count);
        while (w.pairs.size() < cfg.pair_count)
        {
            Vertex s = pick(rng), t = pick(rng);
            if (query(idx, s, t) == INFINITE_DISTANCE)
                ++w.unreachable;
            w.pairs.emplace_back(s, t);
        }
        return w;
    }

    w.l_max = estimate_l_max(idx);
    Distance l_min = std::min(cfg.l_min, w.l_max > 1 ? w.l_max - 1 : 1);
    w.boundaries = bucket_boundaries(l_min, w.l_max, cfg.bucket_count);
    w.bucket_fill.assign(cfg.bucket_count, 0);
    w.bucket_shortfall.assign(cfg.bucket_count, 0);

    for (uint32_t bucket = 0; bucket < cfg.bucket_count; ++bucket)
    {
        Distance lo = w.boundaries[bucket];
        Distance hi = w.boundaries[bucket + 1];
        const size_t attempt_cap = cfg.per_bucket * 100;
        size_t attempts = 0;
        while (w.bucket_fill[bucket] < cfg.per_bucket && attempts < attempt_cap)
        {
            ++attempts;
            Vertex s = pick(rng), t = pick(rng);
            Distance d = query(idx, s, t);
            if (d == INFINITE_DISTANCE || d <= lo || d > hi)
                continue;
            w.pairs.emplace_back(s, t);
            w.bucket_of.push_back(bucket);
            ++w.bucket_fill[bucket];
        }
        w.bucket_shortfall[bucket] = cfg.per_bucket - w.bucket_fill[bucket];
    }
    return w;
}

} // namespace hc2l
