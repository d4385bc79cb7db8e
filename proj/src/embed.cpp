#include "ordtile/embed.hpp"

namespace ordtile {

const char * to_string(TileStatus s)
{
    switch (s) {
        case TileStatus::Tiling: return "Tiling";
        case TileStatus::NoTiling: return "NoTiling";
        case TileStatus::NotDivisible: return "NotDivisible";
        default: return "Timeout";
    }
}

namespace {

    // Pattern positions adjacent to j among 1..j-1; image candidates for j
    // are intersected with the host neighbourhoods of their images.
    std::vector<std::vector<int>> earlier_neighbours(const OrderedGraph & pattern)
    {
        std::vector<std::vector<int>> prev(pattern.n() + 1);
        for (auto [i, j] : pattern.edges())
            prev[j].push_back(i);
        return prev;
    }

    struct EmbedSearch {
        const OrderedGraph & host;
        const OrderedGraph & pattern;
        std::vector<std::vector<int>> prev;
        std::vector<int> image;
        std::int64_t found = 0, cap = 0;
        bool stop_at_first = false;

        EmbedSearch(const OrderedGraph & host_, const OrderedGraph & pattern_) :
            host(host_), pattern(pattern_), prev(earlier_neighbours(pattern_))
        {
        }

        // Extends position pos (1-based); iterates candidates ascending so
        // the first complete image is the lexicographically smallest.
        bool extend(int pos)
        {
            if (pos > pattern.n()) {
                ++found;
                return stop_at_first || found >= cap;
            }
            Bitset cand{host.n() + 1};
            cand.set_range(1, host.n());
            if (pos > 1)
                cand.clear_through(image[pos - 2]);
            for (int q : prev[pos])
                cand &= host.neighbours(image[q - 1]);
            for (int v = cand.find_first(); v != -1; v = cand.find_next(v)) {
                image[pos - 1] = v;
                if (extend(pos + 1))
                    return true;
            }
            return false;
        }
    };

}

std::optional<Embedding> find_embedding(const OrderedGraph & host, const OrderedGraph & pattern)
{
    if (pattern.n() > host.n())
        return std::nullopt;
    EmbedSearch search{host, pattern};
    search.image.assign(pattern.n(), 0);
    search.stop_at_first = true;
    search.cap = 1;
    if (search.extend(1))
        return Embedding{search.image};
    return std::nullopt;
}

std::int64_t count_embeddings(const OrderedGraph & host, const OrderedGraph & pattern, std::int64_t cap)
{
    if (cap <= 0 || pattern.n() > host.n())
        return 0;
    EmbedSearch search{host, pattern};
    search.image.assign(pattern.n(), 0);
    search.cap = cap;
    search.extend(1);
    return search.found;
}

namespace {

    struct TilingSearch {
        const OrderedGraph & host;
        const OrderedGraph & pattern;
        std::vector<std::vector<int>> prev;
        Bitset uncovered;
        std::vector<Embedding> blocks;
        std::uint64_t nodes = 0, budget = 0;
        bool aborted = false;

        TilingSearch(const OrderedGraph & host_, const OrderedGraph & pattern_, std::uint64_t budget_) :
            host(host_), pattern(pattern_), prev(earlier_neighbours(pattern_)),
            uncovered(host_.n() + 1), budget(budget_)
        {
            uncovered.set_range(1, host_.n());
        }

        bool solve()
        {
            int v = uncovered.find_first();
            if (v == -1)
                return true;
            // Each block gets its own image buffer: deeper blocks must not
            // clobber the prefix a backtracking ancestor still relies on.
            std::vector<int> image(pattern.n());
            image[0] = v;
            uncovered.reset(v);
            bool ok = extend(image, 2);
            if (! ok)
                uncovered.set(v);
            return ok;
        }

        bool extend(std::vector<int> & image, int pos)
        {
            if (aborted)
                return false;
            if (pos > pattern.n()) {
                blocks.push_back(Embedding{image});
                if (solve())
                    return true;
                blocks.pop_back();
                return false;
            }
            Bitset cand = uncovered;
            cand.clear_through(image[pos - 2]);
            for (int q : prev[pos])
                cand &= host.neighbours(image[q - 1]);
            for (int v = cand.find_first(); v != -1; v = cand.find_next(v)) {
                if (++nodes > budget) {
                    aborted = true;
                    return false;
                }
                image[pos - 1] = v;
                uncovered.reset(v);
                if (extend(image, pos + 1))
                    return true;
                uncovered.set(v);
            }
            return false;
        }
    };

}

TileResult perfect_tiling(const OrderedGraph & host, const OrderedGraph & pattern, std::uint64_t node_budget)
{
    if (host.n() % pattern.n() != 0)
        return TileResult{TileStatus::NotDivisible, std::nullopt, 0};

    if (pattern.n() == 1) {
        Tiling t;
        for (int v = 1; v <= host.n(); ++v)
            t.blocks.push_back(Embedding{{v}});
        return TileResult{TileStatus::Tiling, std::move(t), 0};
    }

    TilingSearch search{host, pattern, node_budget};
    if (search.solve())
        return TileResult{TileStatus::Tiling, Tiling{std::move(search.blocks)}, search.nodes};
    if (search.aborted)
        return TileResult{TileStatus::Timeout, std::nullopt, search.nodes};
    return TileResult{TileStatus::NoTiling, std::nullopt, search.nodes};
}

bool verify_tiling(const OrderedGraph & host, const OrderedGraph & pattern, const Tiling & t)
{
    int n = host.n(), h = pattern.n();
    Bitset seen{n + 1};
    int covered = 0;
    for (auto & block : t.blocks) {
        if (int(block.image.size()) != h)
            return false;
        for (std::size_t k = 0; k < block.image.size(); ++k) {
            int v = block.image[k];
            if (v < 1 || v > n || seen.test(v))
                return false;
            if (k > 0 && block.image[k - 1] >= v)
                return false;
            seen.set(v);
            ++covered;
        }
        for (auto [i, j] : pattern.edges())
            if (! host.has_edge(block.image[i - 1], block.image[j - 1]))
                return false;
    }
    return covered == n;
}

}
