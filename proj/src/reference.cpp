#include "ordtile/reference.hpp"

#include <algorithm>
#include <set>

namespace ordtile {

namespace {

    // A block is a sorted h-set; the only order-preserving map onto it is
    // the sorted enumeration, so validity is a direct edge-list scan.
    bool block_spans_pattern(const OrderedGraph & host, const OrderedGraph & pattern,
            const std::vector<int> & block)
    {
        const auto & edges = host.edges();
        for (auto [i, j] : pattern.edges()) {
            Edge want{block[i - 1], block[j - 1]};
            if (! std::binary_search(edges.begin(), edges.end(), want))
                return false;
        }
        return true;
    }

    struct PartitionEnumerator {
        const OrderedGraph & host;
        const OrderedGraph & pattern;
        std::vector<bool> used;
        std::vector<std::vector<int>> parts;

        bool enumerate()
        {
            int v = 1;
            while (v <= host.n() && used[v])
                ++v;
            if (v > host.n())
                return all_blocks_valid();

            // v joins a fresh block together with every (h-1)-subset of the
            // remaining free vertices above it.
            std::vector<int> free;
            for (int u = v + 1; u <= host.n(); ++u)
                if (! used[u])
                    free.push_back(u);

            int need = pattern.n() - 1;
            std::vector<int> pick(need);
            return choose(v, free, pick, 0, 0);
        }

        bool choose(int v, const std::vector<int> & free, std::vector<int> & pick, int depth, int from)
        {
            if (depth == int(pick.size())) {
                std::vector<int> block{v};
                block.insert(block.end(), pick.begin(), pick.end());
                for (int u : block)
                    used[u] = true;
                parts.push_back(block);
                if (enumerate())
                    return true;
                parts.pop_back();
                for (int u : block)
                    used[u] = false;
                return false;
            }
            for (int k = from; k < int(free.size()); ++k) {
                pick[depth] = free[k];
                if (choose(v, free, pick, depth + 1, k + 1))
                    return true;
            }
            return false;
        }

        bool all_blocks_valid()
        {
            for (auto & block : parts)
                if (! block_spans_pattern(host, pattern, block))
                    return false;
            return true;
        }
    };

}

TileResult perfect_tiling_by_partition_enumeration(const OrderedGraph & host, const OrderedGraph & pattern)
{
    if (host.n() % pattern.n() != 0)
        return TileResult{TileStatus::NotDivisible, std::nullopt, 0};

    PartitionEnumerator e{host, pattern, std::vector<bool>(host.n() + 1, false), {}};
    if (e.enumerate()) {
        Tiling t;
        for (auto & block : e.parts)
            t.blocks.push_back(Embedding{block});
        return TileResult{TileStatus::Tiling, std::move(t), 0};
    }
    return TileResult{TileStatus::NoTiling, std::nullopt, 0};
}

}
