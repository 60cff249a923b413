#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "hc2l/builder.hpp"
#include "hc2l/index_io.hpp"
#include "hc2l/workload.hpp"

using namespace hc2l;

namespace {

// accepts "num/den" or a short decimal like 0.2
Beta parse_beta(const std::string &text)
{
    if (auto slash = text.find('/'); slash != std::string::npos)
        return Beta(static_cast<uint32_t>(std::stoul(text.substr(0, slash))),
                    static_cast<uint32_t>(std::stoul(text.substr(slash + 1))));
    auto dot = text.find('.');
    if (dot == std::string::npos)
        return Beta(static_cast<uint32_t>(std::stoul(text)), 1);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t decimals = text.size() - dot - 1;
    if (decimals > 8)
        throw std::invalid_argument("beta has too many decimals: " + text);
    uint32_t den = 1;
    for (size_t i = 0; i < decimals; ++i)
        den *= 10;
    return Beta(static_cast<uint32_t>(std::stoul(digits)), den);
}

std::string distance_string(Distance d)
{
    return d == INFINITE_DISTANCE ? "INF" : std::to_string(d);
}

double elapsed_seconds(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_build(const std::string &graph_path, const std::string &beta_text, uint32_t leaf_size, uint32_t threads,
              bool no_tail_pruning, bool no_contraction, const std::string &out_path)
{
    auto start = std::chrono::steady_clock::now();
    WeightedGraph g = parse_dimacs_file(graph_path);

    BuildOptions options;
    options.beta = parse_beta(beta_text);
    options.leaf_size = leaf_size;
    options.threads = threads;
    options.tail_pruning = !no_tail_pruning;
    options.contraction = !no_contraction;

    BuildResult result = build_index(g, options);
    size_t bytes = save_index_file(result.index, out_path);

    const BuildStats &s = result.stats;
    std::cout << "graph=" << graph_path << "\n"
              << "vertices=" << s.original_vertices << "\n"
              << "edges=" << s.original_edges << "\n"
              << "core_vertices=" << s.core_vertices << "\n"
              << "core_edges=" << s.core_edges << "\n"
              << "beta=" << options.beta.num << "/" << options.beta.den << "\n"
              << "height=" << s.height << "\n"
              << "max_cut=" << s.max_cut << "\n"
              << "entries=" << s.entry_count << "\n"
              << "label_bytes=" << s.label_bytes << "\n"
              << "shortcuts=" << s.shortcut_count << "\n"
              << "naive_upper_bound=" << s.naive_upper_bound << "\n"
              << "cut_cover_lower_bound=" << s.cut_cover_lower_bound << "\n"
              << "index_bytes=" << bytes << "\n"
              << "build_seconds=" << elapsed_seconds(start) << "\n"
              << "out=" << out_path << "\n";
    return 0;
}

int cmd_query(const std::string &index_path, int64_t s, int64_t t, const std::string &pairs_path)
{
    DistanceIndex idx = load_index_file(index_path);
    const int64_t n = idx.original_vertex_count;
    int failures = 0;

    auto answer = [&](int64_t a, int64_t b) {
        if (a < 1 || a > n || b < 1 || b > n)
        {
            std::cout << "error: vertex id out of range [1," << n << "]\n";
            ++failures;
            return;
        }
        std::cout << distance_string(query(idx, static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1))) << "\n";
    };

    if (!pairs_path.empty())
    {
        std::ifstream in(pairs_path);
        if (!in)
        {
            std::cerr << "cannot open pairs file: " << pairs_path << "\n";
            return 1;
        }
        std::string line;
        while (std::getline(in, line))
        {
            if (line.empty())
                continue;
            std::istringstream ls(line);
            int64_t a, b;
            if (!(ls >> a >> b))
            {
                std::cout << "error: malformed pair line: " << line << "\n";
                ++failures;
                continue;
            }
            answer(a, b);
        }
    }
    else
        answer(s, t);
    return failures == 0 ? 0 : 1;
}

int cmd_verify(const std::string &graph_path, const std::string &index_path, uint64_t samples, bool all_pairs,
               uint64_t seed)
{
    WeightedGraph g = parse_dimacs_file(graph_path);
    DistanceIndex idx = load_index_file(index_path);
    if (graph_fingerprint(g) != idx.fingerprint)
    {
        std::cout << "verify=fail reason=fingerprint_mismatch\n";
        return 1;
    }
    const Vertex n = g.vertex_count();
    uint64_t checked = 0, mismatches = 0;

    auto check = [&](Vertex s, Vertex t, Distance expected) {
        ++checked;
        Distance got = query(idx, s, t);
        if (got != expected)
        {
            ++mismatches;
            std::cout << "mismatch s=" << s + 1 << " t=" << t + 1 << " expected=" << distance_string(expected)
                      << " got=" << distance_string(got) << "\n";
        }
    };

    if (all_pairs)
    {
        if (n > 5000)
        {
            std::cerr << "--all-pairs limited to graphs with at most 5000 vertices\n";
            return 1;
        }
        for (Vertex s = 0; s < n; ++s)
        {
            auto dist = dijkstra(g, s);
            for (Vertex t = 0; t < n; ++t)
                check(s, t, dist[t]);
        }
    }
    else
    {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Vertex> pick(0, n - 1);
        for (uint64_t i = 0; i < samples; ++i)
        {
            Vertex s = pick(rng), t = pick(rng);
            check(s, t, dijkstra(g, s)[t]);
        }
    }
    std::cout << "checked=" << checked << "\n"
              << "mismatches=" << mismatches << "\n"
              << "verify=" << (mismatches == 0 ? "pass" : "fail") << "\n";
    return mismatches == 0 ? 0 : 1;
}

int cmd_bench(const std::string &index_path, uint64_t random_pairs, uint32_t buckets, uint64_t per_bucket,
              uint64_t l_min, uint64_t seed)
{
    DistanceIndex idx = load_index_file(index_path);

    BenchConfig cfg;
    cfg.seed = seed;
    if (random_pairs > 0)
    {
        cfg.mode = BenchConfig::Mode::random_pairs;
        cfg.pair_count = random_pairs;
    }
    else
    {
        cfg.mode = BenchConfig::Mode::distance_buckets;
        cfg.bucket_count = buckets;
        cfg.per_bucket = per_bucket;
        cfg.l_min = l_min;
    }
    Workload w = generate_workload(idx, cfg);
    if (w.pairs.empty())
    {
        std::cerr << "workload is empty\n";
        return 1;
    }

    std::vector<double> latency(w.pairs.size());
    QueryStats stats;
    auto start = std::chrono::steady_clock::now();
    for (size_t i = 0; i < w.pairs.size(); ++i)
    {
        auto t0 = std::chrono::steady_clock::now();
        volatile Distance d = query(idx, w.pairs[i].first, w.pairs[i].second, &stats);
        (void)d;
        latency[i] = std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - t0).count();
    }
    double total = elapsed_seconds(start);

    auto report = [](const std::string &label, std::vector<double> values) {
        if (values.empty())
            return;
        std::sort(values.begin(), values.end());
        double mean = 0;
        for (double v : values)
            mean += v;
        mean /= static_cast<double>(values.size());
        std::cout << label << "_pairs=" << values.size() << "\n"
                  << label << "_mean_ns=" << mean << "\n"
                  << label << "_median_ns=" << values[values.size() / 2] << "\n";
    };

    if (cfg.mode == BenchConfig::Mode::distance_buckets)
    {
        std::cout << "l_max=" << w.l_max << "\n";
        for (uint32_t b = 0; b < cfg.bucket_count; ++b)
        {
            std::vector<double> bucket_latency;
            for (size_t i = 0; i < w.pairs.size(); ++i)
                if (w.bucket_of[i] == b)
                    bucket_latency.push_back(latency[i]);
            std::cout << "bucket_" << b + 1 << "_range=(" << w.boundaries[b] << "," << w.boundaries[b + 1] << "]\n";
            if (w.bucket_shortfall[b] > 0)
                std::cout << "bucket_" << b + 1 << "_shortfall=" << w.bucket_shortfall[b] << "\n";
            report("bucket_" + std::to_string(b + 1), std::move(bucket_latency));
        }
    }
    else
        std::cout << "unreachable_pairs=" << w.unreachable << "\n";

    report("overall", latency);
    std::cout << "average_hub_size=" << static_cast<double>(stats.scanned_positions) / static_cast<double>(stats.queries)
              << "\n"
              << "total_seconds=" << total << "\n";
    return 0;
}

int cmd_stats(const std::string &index_path)
{
    DistanceIndex idx = load_index_file(index_path);
    std::cout << "vertices=" << idx.original_vertex_count << "\n"
              << "core_vertices=" << idx.contraction.core.vertex_count() << "\n"
              << "core_edges=" << idx.contraction.core.edge_count() << "\n"
              << "contracted_vertices=" << idx.contraction.records.size() << "\n"
              << "beta=" << idx.beta.num << "/" << idx.beta.den << "\n"
              << "tail_pruning=" << (idx.tail_pruning ? "on" : "off") << "\n"
              << "contraction=" << (idx.contraction_enabled ? "on" : "off") << "\n"
              << "nodes=" << idx.hierarchy.nodes.size() << "\n"
              << "height=" << idx.hierarchy.height() << "\n"
              << "max_cut=" << idx.hierarchy.max_cut_size() << "\n"
              << "entries=" << idx.labels.entry_count() << "\n"
              << "label_bytes=" << idx.labels.byte_size() << "\n"
              << "fingerprint=" << idx.fingerprint << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"hierarchical cut labelling distance oracle"};
    app.require_subcommand(1);

    std::string graph_path, index_path, out_path, pairs_path, beta_text = "0.2";
    uint32_t leaf_size = 1, threads = 1, buckets = 10;
    bool no_tail_pruning = false, no_contraction = false, all_pairs = false;
    int64_t s = 0, t = 0;
    uint64_t samples = 1000, seed = 1, random_pairs = 0, per_bucket = 10000, l_min = 1000;

    auto *build = app.add_subcommand("build", "build an index from a DIMACS graph");
    build->add_option("--graph", graph_path)->required();
    build->add_option("--beta", beta_text, "balance parameter, decimal or num/den");
    build->add_option("--leaf-size", leaf_size);
    build->add_option("--threads", threads);
    build->add_flag("--no-tail-pruning", no_tail_pruning);
    build->add_flag("--no-contraction", no_contraction);
    build->add_option("--out", out_path)->required();

    auto *query_cmd = app.add_subcommand("query", "answer distance queries (1-based ids)");
    query_cmd->add_option("--index", index_path)->required();
    auto *s_opt = query_cmd->add_option("--s", s);
    auto *t_opt = query_cmd->add_option("--t", t);
    auto *pairs_opt = query_cmd->add_option("--pairs", pairs_path, "file with one 's t' pair per line");
    s_opt->needs(t_opt);
    pairs_opt->excludes(s_opt);

    auto *verify = app.add_subcommand("verify", "compare index answers against Dijkstra");
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--index", index_path)->required();
    verify->add_option("--samples", samples);
    verify->add_flag("--all-pairs", all_pairs);
    verify->add_option("--seed", seed);

    auto *bench = app.add_subcommand("bench", "timed query workload");
    bench->add_option("--index", index_path)->required();
    bench->add_option("--random", random_pairs, "random-pair workload size");
    bench->add_option("--buckets", buckets);
    bench->add_option("--per-bucket", per_bucket);
    bench->add_option("--lmin", l_min);
    bench->add_option("--seed", seed);

    auto *stats = app.add_subcommand("stats", "print index statistics");
    stats->add_option("--index", index_path)->required();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (build->parsed())
            return cmd_build(graph_path, beta_text, leaf_size, threads, no_tail_pruning, no_contraction, out_path);
        if (query_cmd->parsed())
        {
            if (pairs_path.empty() && (s_opt->count() == 0 || t_opt->count() == 0))
            {
                std::cerr << "query needs either --s/--t or --pairs\n";
                return 1;
            }
            return cmd_query(index_path, s, t, pairs_path);
        }
        if (verify->parsed())
            return cmd_verify(graph_path, index_path, samples, all_pairs, seed);
        if (bench->parsed())
            return cmd_bench(index_path, random_pairs, buckets, per_bucket, l_min, seed);
        if (stats->parsed())
            return cmd_stats(index_path);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
