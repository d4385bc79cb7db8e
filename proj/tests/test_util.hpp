#ifndef ORDTILE_TEST_UTIL_HPP
#define ORDTILE_TEST_UTIL_HPP

#include "ordtile/graph.hpp"

#include <random>
#include <vector>

namespace ordtile::testutil {

inline OrderedGraph random_pattern(int h, double p, std::mt19937_64 & rng)
{
    std::vector<Edge> edges;
    std::uniform_real_distribution<double> coin{0.0, 1.0};
    for (int i = 1; i <= h; ++i)
        for (int j = i + 1; j <= h; ++j)
            if (coin(rng) < p)
                edges.emplace_back(i, j);
    return OrderedGraph{h, std::move(edges)};
}

// All graphs on [h] in edge-bitmask order; mask bit k toggles the k-th pair
// in lexicographic order.
inline OrderedGraph graph_from_mask(int h, unsigned mask)
{
    std::vector<Edge> edges;
    int k = 0;
    for (int i = 1; i <= h; ++i)
        for (int j = i + 1; j <= h; ++j, ++k)
            if ((mask >> k) & 1)
                edges.emplace_back(i, j);
    return OrderedGraph{h, std::move(edges)};
}

inline OrderedGraph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.emplace_back(i, j);
    return OrderedGraph{n, std::move(edges)};
}

}

#endif
