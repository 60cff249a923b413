#include <doctest.h>

#include <cmath>

#include "hc2l/builder.hpp"
#include "hc2l/workload.hpp"
#include "support/corpus.hpp"

using namespace hc2l;
using namespace hc2l::testing;

TEST_CASE("bucket boundaries follow the geometric formula")
{
    auto bounds = bucket_boundaries(1000, 1024000, 10);
    REQUIRE(bounds.size() == 11);
    CHECK(bounds[0] == 1000);
    CHECK(bounds[10] == 1024000);
    double x = std::pow(1024.0, 0.1);
    for (uint32_t i = 1; i < 10; ++i)
        CHECK(bounds[i] == static_cast<Distance>(std::llround(1000.0 * std::pow(x, i))));
}

TEST_CASE("fixed seed reproduces the workload")
{
    BuildResult r = build_index(corpus()[0].graph, BuildOptions{});
    BenchConfig cfg;
    cfg.mode = BenchConfig::Mode::random_pairs;
    cfg.pair_count = 500;
    cfg.seed = 42;
    Workload a = generate_workload(r.index, cfg);
    Workload b = generate_workload(r.index, cfg);
    CHECK(a.pairs == b.pairs);
    CHECK(a.unreachable == b.unreachable);

    cfg.seed = 43;
    CHECK(generate_workload(r.index, cfg).pairs != a.pairs);
}

TEST_CASE("bucket workload pairs land in their bucket")
{
    BuildResult r = build_index(corpus()[2].graph, BuildOptions{});
    BenchConfig cfg;
    cfg.mode = BenchConfig::Mode::distance_buckets;
    cfg.per_bucket = 20;
    cfg.l_min = 50;
    cfg.seed = 7;
    Workload w = generate_workload(r.index, cfg);
    REQUIRE(w.boundaries.size() == cfg.bucket_count + 1);
    for (size_t i = 0; i < w.pairs.size(); ++i)
    {
        Distance d = query(r.index, w.pairs[i].first, w.pairs[i].second);
        size_t b = w.bucket_of[i];
        CHECK(d > w.boundaries[b]);
        CHECK(d <= w.boundaries[b + 1]);
    }
    for (uint32_t b = 0; b < cfg.bucket_count; ++b)
        CHECK(w.bucket_fill[b] + w.bucket_shortfall[b] == cfg.per_bucket);
}

TEST_CASE("underfilled buckets are reported, not fatal")
{
    // tiny graph: some geometric buckets contain no realizable distance
    WeightedGraph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    BuildResult r = build_index(g, BuildOptions{});
    BenchConfig cfg;
    cfg.mode = BenchConfig::Mode::distance_buckets;
    cfg.per_bucket = 5;
    cfg.l_min = 1;
    cfg.seed = 3;
    Workload w = generate_workload(r.index, cfg);
    size_t total_shortfall = 0;
    for (size_t s : w.bucket_shortfall)
        total_shortfall += s;
    CHECK(total_shortfall > 0);
}
