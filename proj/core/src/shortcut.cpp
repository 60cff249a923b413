#include "hc2l/shortcut.hpp"

#include <algorithm>
#include <stdexcept>

namespace hc2l {

std::vector<Vertex> border_vertices(const WeightedGraph &parent, const std::vector<Vertex> &cut,
                                    const std::vector<Vertex> &part)
{
    std::vector<bool> in_cut(parent.vertex_count(), false);
    for (Vertex c : cut)
        in_cut[c] = true;
    std::vector<Vertex> border;
    for (Vertex v : part)
        for (const Edge &e : parent.neighbors(v))
            if (in_cut[e.to])
            {
                border.push_back(v);
                break;
            }
    std::sort(border.begin(), border.end());
    return border;
}

std::vector<Shortcut> add_shortcuts(const WeightedGraph &parent, const std::vector<Vertex> &cut,
                                    const std::vector<std::vector<Distance>> &cut_distances,
                                    const std::vector<Vertex> &part)
{
    std::vector<Vertex> border = border_vertices(parent, cut, part);
    const size_t nb = border.size();
    if (nb < 2)
        return {};

    std::vector<bool> in_part(parent.vertex_count(), false);
    for (Vertex v : part)
        in_part[v] = true;

    // d_inside: shortest distances staying within G[part]
    std::vector<std::vector<Distance>> d_inside(nb);
    for (size_t i = 0; i < nb; ++i)
        d_inside[i] = dijkstra(parent, border[i], in_part);

    // true parent distance between borders: either inside the partition or
    // out through a cut vertex and back
    auto through_cut = [&](Vertex b1, Vertex b2) {
        Distance best = INFINITE_DISTANCE;
        for (const auto &dist : cut_distances)
            best = std::min(best, safe_sum(dist[b1], dist[b2]));
        return best;
    };
    std::vector<std::vector<Distance>> d_true(nb, std::vector<Distance>(nb, 0));
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = i + 1; j < nb; ++j)
            d_true[i][j] = d_true[j][i] = std::min(d_inside[i][border[j]], through_cut(border[i], border[j]));

    std::vector<Shortcut> shortcuts;
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = i + 1; j < nb; ++j)
        {
            if (d_true[i][j] >= d_inside[i][border[j]])
                continue; // inside path already optimal
            bool redundant = false;
            for (size_t k = 0; k < nb && !redundant; ++k)
                if (k != i && k != j && safe_sum(d_true[i][k], d_true[k][j]) == d_true[i][j])
                    redundant = true;
            if (redundant)
                continue;
            if (d_true[i][j] > std::numeric_limits<Weight>::max())
                throw std::runtime_error("shortcut weight exceeds 32-bit edge range");
            shortcuts.push_back({border[i], border[j], static_cast<Weight>(d_true[i][j])});
        }
    return shortcuts;
}

} // namespace hc2l
