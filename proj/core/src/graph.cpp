#include "hc2l/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>

namespace hc2l {

WeightedGraph::WeightedGraph(Vertex vertex_count, std::vector<std::tuple<Vertex, Vertex, Weight>> edges)
{
    adjacency_.resize(vertex_count);
    // canonicalize: drop self-loops, collapse duplicates to minimum weight
    for (auto &[u, v, w] : edges)
        if (u > v)
            std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    for (size_t i = 0; i < edges.size(); ++i)
    {
        auto [u, v, w] = edges[i];
        if (u == v)
            continue;
        // sorted by (u,v,w): the first entry of a duplicate run carries the minimum weight
        if (i > 0 && std::get<0>(edges[i - 1]) == u && std::get<1>(edges[i - 1]) == v)
            continue;
        adjacency_[u].push_back({v, w});
        adjacency_[v].push_back({u, w});
        ++edge_count_;
    }
    for (auto &adj : adjacency_)
        std::sort(adj.begin(), adj.end(), [](const Edge &a, const Edge &b) { return a.to < b.to; });
}

std::vector<std::tuple<Vertex, Vertex, Weight>> WeightedGraph::edges() const
{
    std::vector<std::tuple<Vertex, Vertex, Weight>> result;
    result.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (const Edge &e : adjacency_[u])
            if (u < e.to)
                result.emplace_back(u, e.to, e.weight);
    return result;
}

namespace {

struct DimacsLine
{
    char type = 0;
    uint64_t a = 0, b = 0, c = 0;
};

} // namespace

WeightedGraph parse_dimacs(std::istream &in)
{
    std::string line;
    size_t line_number = 0;
    uint64_t n = 0;
    bool have_problem = false;
    std::vector<std::tuple<Vertex, Vertex, Weight>> edges;

    while (std::getline(in, line))
    {
        ++line_number;
        // strip trailing CR from DOS-formatted challenge files
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        if (line[0] == 'p')
        {
            std::string p, sp;
            uint64_t m = 0;
            if (!(ls >> p >> sp >> n >> m) || sp != "sp")
                throw ParseError(line_number, "malformed problem line: " + line);
            if (have_problem)
                throw ParseError(line_number, "duplicate problem line");
            have_problem = true;
            edges.reserve(m / 2);
        }
        else if (line[0] == 'a')
        {
            if (!have_problem)
                throw ParseError(line_number, "arc before problem line");
            char a;
            int64_t u, v, w;
            if (!(ls >> a >> u >> v >> w))
                throw ParseError(line_number, "malformed arc line: " + line);
            if (u < 1 || static_cast<uint64_t>(u) > n || v < 1 || static_cast<uint64_t>(v) > n)
                throw ParseError(line_number, "vertex id out of range [1," + std::to_string(n) + "]");
            if (w < 1 || w > std::numeric_limits<Weight>::max())
                throw ParseError(line_number, "arc weight out of range: " + std::to_string(w));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), static_cast<Weight>(w));
        }
        else
            throw ParseError(line_number, "unrecognized line: " + line);
    }
    if (!have_problem)
        throw ParseError(line_number, "missing problem line");
    return WeightedGraph(static_cast<Vertex>(n), std::move(edges));
}

WeightedGraph parse_dimacs_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open graph file: " + path);
    return parse_dimacs(in);
}

std::vector<Distance> dijkstra(const WeightedGraph &g, Vertex source)
{
    std::vector<Distance> dist(g.vertex_count(), INFINITE_DISTANCE);
    using QueueEntry = std::pair<Distance, Vertex>;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;
    queue.emplace(0, source);
    while (!queue.empty())
    {
        auto [d, v] = queue.top();
        queue.pop();
        if (dist[v] != INFINITE_DISTANCE)
            continue;
        dist[v] = d;
        for (const Edge &e : g.neighbors(v))
            if (dist[e.to] == INFINITE_DISTANCE)
                queue.emplace(d + e.weight, e.to);
    }
    return dist;
}

std::vector<Distance> dijkstra(const WeightedGraph &g, Vertex source, const std::vector<bool> &active)
{
    std::vector<Distance> dist(g.vertex_count(), INFINITE_DISTANCE);
    using QueueEntry = std::pair<Distance, Vertex>;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;
    queue.emplace(0, source);
    while (!queue.empty())
    {
        auto [d, v] = queue.top();
        queue.pop();
        if (dist[v] != INFINITE_DISTANCE)
            continue;
        dist[v] = d;
        for (const Edge &e : g.neighbors(v))
            if (active[e.to] && dist[e.to] == INFINITE_DISTANCE)
                queue.emplace(d + e.weight, e.to);
    }
    return dist;
}

std::vector<std::vector<Vertex>> connected_components(const WeightedGraph &g)
{
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::vector<Vertex>> components;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s)
    {
        if (seen[s])
            continue;
        std::vector<Vertex> component;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty())
        {
            Vertex v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (const Edge &e : g.neighbors(v))
                if (!seen[e.to])
                {
                    seen[e.to] = true;
                    stack.push_back(e.to);
                }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    std::stable_sort(components.begin(), components.end(), [](const auto &a, const auto &b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a.front() < b.front();
    });
    return components;
}

uint64_t graph_fingerprint(const WeightedGraph &g)
{
    // FNV-1a over vertex count and the canonical sorted edge list
    uint64_t hash = 14695981039346656037ull;
    auto mix = [&hash](uint64_t value) {
        for (int i = 0; i < 8; ++i)
        {
            hash ^= (value >> (8 * i)) & 0xFF;
            hash *= 1099511628211ull;
        }
    };
    mix(g.vertex_count());
    for (auto [u, v, w] : g.edges())
    {
        mix(u);
        mix(v);
        mix(w);
    }
    return hash;
}

} // namespace hc2l
