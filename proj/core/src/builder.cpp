#include "hc2l/builder.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hc2l {

namespace {

struct Tree
{
    NodeId id = ROOT_NODE_ID;
    std::vector<Vertex> cut; // core ids, rank order
    uint32_t subtree_size = 0;
    std::unique_ptr<Tree> left, right;
};

struct Shared
{
    const BuildOptions *options;
    LabelStore *labels;
    std::vector<NodeId> *vertex_node;
    std::vector<uint32_t> *vertex_pos;
    std::atomic<int> spare_threads{0};
    std::mutex stats_mutex;
    size_t naive_bound = 0;
    size_t cut_cover_bound = 0;
    size_t shortcut_count = 0;

    bool acquire_thread()
    {
        int spare = spare_threads.load();
        while (spare > 0)
            if (spare_threads.compare_exchange_weak(spare, spare - 1))
                return true;
        return false;
    }
    void release_thread() { spare_threads.fetch_add(1); }
};

uint32_t to_label_value(Distance d)
{
    if (d == INFINITE_DISTANCE)
        return LABEL_INFINITY;
    if (d >= LABEL_INFINITY)
        throw std::runtime_error("distance exceeds 32-bit label range");
    return static_cast<uint32_t>(d);
}

std::unique_ptr<Tree> build_node(Shared &sh, const WeightedGraph &g, const std::vector<Vertex> &to_core, NodeId id)
{
    const Vertex n = g.vertex_count();
    const BuildOptions &options = *sh.options;

    bool leaf = n <= options.leaf_size || n <= 2;
    CutResult cr;
    if (!leaf)
    {
        cr = balanced_cut(g, options.beta);
        if (cr.p_a.empty() && cr.p_b.empty())
            leaf = true; // the whole subgraph fell into the cut
    }

    std::vector<Vertex> cut;
    CutRanking ranking;
    if (leaf)
    {
        cut.resize(n);
        std::iota(cut.begin(), cut.end(), 0);
    }
    else
    {
        ranking = rank_cut(g, cr.cut);
        cut = ranking.order;
    }
    const size_t cut_size = cut.size();

    // label searches: dist_i prunes against all higher-ranked cut vertices
    std::vector<std::vector<DistPruneEntry>> dist(cut_size);
    std::vector<bool> prune(n, false);
    for (size_t i = 0; i < cut_size; ++i)
    {
        dist[i] = dist_and_prune(g, cut[i], prune);
        prune[cut[i]] = true;
    }

    const uint32_t depth = node_depth(id);
    std::vector<uint32_t> cut_pos(n, NO_NODE);
    for (size_t i = 0; i < cut_size; ++i)
        cut_pos[cut[i]] = static_cast<uint32_t>(i);

    for (Vertex u = 0; u < n; ++u)
    {
        size_t len;
        if (cut_pos[u] != NO_NODE)
        {
            // cut vertex: array ends at its own position (self distance 0)
            len = cut_pos[u] + 1;
            (*sh.vertex_node)[to_core[u]] = id;
            (*sh.vertex_pos)[to_core[u]] = cut_pos[u];
        }
        else if (options.tail_pruning)
        {
            // drop the maximal prunable suffix; position 0 is never pruned
            len = 0;
            for (size_t i = 0; i < cut_size; ++i)
                if (!dist[i][u].p)
                    len = i + 1;
        }
        else
            len = cut_size;

        std::vector<uint32_t> values(len);
        for (size_t i = 0; i < len; ++i)
            values[i] = to_label_value(dist[i][u].d);
        (*sh.labels).arrays[to_core[u]].push_back(std::move(values));
    }

    // shortcut-enhanced child subgraphs, left = P_A side
    std::vector<std::vector<Vertex>> parts;
    if (!leaf)
    {
        if (!cr.p_a.empty())
            parts.push_back(std::move(cr.p_a));
        if (!cr.p_b.empty())
            parts.push_back(std::move(cr.p_b));
    }
    if (!parts.empty() && depth >= MAX_HIERARCHY_DEPTH)
        throw std::runtime_error("hierarchy too deep (over 58 levels); raise beta or leaf size");

    std::vector<std::vector<Distance>> cut_distances(cut_size);
    if (!parts.empty())
        for (size_t i = 0; i < cut_size; ++i)
        {
            cut_distances[i].resize(n);
            for (Vertex u = 0; u < n; ++u)
                cut_distances[i][u] = dist[i][u].d;
        }

    std::vector<std::vector<Shortcut>> shortcuts(parts.size());
    std::vector<WeightedGraph> child_graphs(parts.size());
    std::vector<std::vector<Vertex>> child_to_core(parts.size());
    for (size_t pi = 0; pi < parts.size(); ++pi)
    {
        const std::vector<Vertex> &part = parts[pi];
        shortcuts[pi] = add_shortcuts(g, cut, cut_distances, part);

        std::vector<uint32_t> local(n, NO_NODE);
        child_to_core[pi].resize(part.size());
        for (size_t i = 0; i < part.size(); ++i)
        {
            local[part[i]] = static_cast<uint32_t>(i);
            child_to_core[pi][i] = to_core[part[i]];
        }
        std::vector<std::tuple<Vertex, Vertex, Weight>> edges;
        for (Vertex u : part)
            for (const Edge &e : g.neighbors(u))
                if (local[e.to] != NO_NODE && u < e.to)
                    edges.emplace_back(local[u], local[e.to], e.weight);
        for (const Shortcut &sc : shortcuts[pi])
            edges.emplace_back(local[sc.b1], local[sc.b2], sc.weight);
        child_graphs[pi] = WeightedGraph(static_cast<Vertex>(part.size()), std::move(edges));
    }

    {
        std::scoped_lock lock(sh.stats_mutex);
        sh.naive_bound += cut_size * n;
        if (leaf)
            sh.cut_cover_bound += n; // only the self entries are uncovered
        else
            for (uint32_t count : ranking.prune_counts)
                sh.cut_cover_bound += n - count;
        for (const auto &sc : shortcuts)
            sh.shortcut_count += sc.size();
    }

    if (options.node_observer)
        options.node_observer(NodeSnapshot{id, g, to_core, cut, parts, shortcuts, child_graphs});

    auto tree = std::make_unique<Tree>();
    tree->id = id;
    tree->subtree_size = n;
    tree->cut.resize(cut_size);
    for (size_t i = 0; i < cut_size; ++i)
        tree->cut[i] = to_core[cut[i]];

    if (parts.size() == 2)
    {
        NodeId left_id = child_node_id(id, false);
        NodeId right_id = child_node_id(id, true);
        if (sh.acquire_thread())
        {
            auto left_future = std::async(std::launch::async, [&] {
                auto node = build_node(sh, child_graphs[0], child_to_core[0], left_id);
                sh.release_thread();
                return node;
            });
            tree->right = build_node(sh, child_graphs[1], child_to_core[1], right_id);
            tree->left = left_future.get();
        }
        else
        {
            tree->left = build_node(sh, child_graphs[0], child_to_core[0], left_id);
            tree->right = build_node(sh, child_graphs[1], child_to_core[1], right_id);
        }
    }
    else if (parts.size() == 1)
        tree->left = build_node(sh, child_graphs[0], child_to_core[0], child_node_id(id, false));
    return tree;
}

void flatten(const Tree &tree, Hierarchy &hierarchy)
{
    uint32_t index = static_cast<uint32_t>(hierarchy.nodes.size());
    hierarchy.nodes.push_back({tree.id, tree.cut, NO_NODE, NO_NODE, tree.subtree_size});
    if (tree.left)
    {
        hierarchy.nodes[index].left = static_cast<uint32_t>(hierarchy.nodes.size());
        flatten(*tree.left, hierarchy);
    }
    if (tree.right)
    {
        hierarchy.nodes[index].right = static_cast<uint32_t>(hierarchy.nodes.size());
        flatten(*tree.right, hierarchy);
    }
}

} // namespace

BuildResult build_index(const WeightedGraph &g, const BuildOptions &options)
{
    BuildResult result;
    DistanceIndex &idx = result.index;
    BuildStats &stats = result.stats;

    stats.original_vertices = g.vertex_count();
    stats.original_edges = g.edge_count();

    idx.original_vertex_count = g.vertex_count();
    idx.beta = options.beta;
    idx.tail_pruning = options.tail_pruning;
    idx.contraction_enabled = options.contraction;
    idx.fingerprint = graph_fingerprint(g);
    idx.contraction = options.contraction ? contract_degree_one(g) : identity_contraction(g);

    const WeightedGraph &core = idx.contraction.core;
    const Vertex core_n = core.vertex_count();
    stats.core_vertices = core_n;
    stats.core_edges = core.edge_count();

    idx.labels.arrays.resize(core_n);
    idx.hierarchy.beta = options.beta;
    idx.hierarchy.vertex_node.assign(core_n, ROOT_NODE_ID);
    idx.hierarchy.vertex_pos.assign(core_n, 0);

    if (core_n > 0)
    {
        Shared sh;
        sh.options = &options;
        sh.labels = &idx.labels;
        sh.vertex_node = &idx.hierarchy.vertex_node;
        sh.vertex_pos = &idx.hierarchy.vertex_pos;
        sh.spare_threads = options.threads > 1 ? static_cast<int>(options.threads) - 1 : 0;

        std::vector<Vertex> to_core(core_n);
        std::iota(to_core.begin(), to_core.end(), 0);
        auto tree = build_node(sh, core, to_core, ROOT_NODE_ID);
        flatten(*tree, idx.hierarchy);

        stats.naive_upper_bound = sh.naive_bound;
        stats.cut_cover_lower_bound = sh.cut_cover_bound;
        stats.shortcut_count = sh.shortcut_count;
    }

    stats.height = idx.hierarchy.height();
    stats.max_cut = idx.hierarchy.max_cut_size();
    stats.entry_count = idx.labels.entry_count();
    stats.label_bytes = idx.labels.byte_size();
    return result;
}

} // namespace hc2l
