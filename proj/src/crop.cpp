#include "ordtile/crop.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ordtile {

namespace {

    struct Block {
        int orig;                  // index into the caller's set list
        std::vector<int> elems;    // sorted ascending
    };

    // Lower median: element at 1-based rank ceil(q/2) of the sorted set.
    int median(const std::vector<int> & s)
    {
        return s[(s.size() - 1) / 2];
    }

    // Keeps {a >= m} of the higher-median block and {a <= m} of the other;
    // equal medians treat the first argument as the higher one. Returns the
    // pair in block order (left first).
    std::pair<Block, Block> split_pair(const Block & x, const Block & y)
    {
        auto upper = [](const Block & b) {
            int m = median(b.elems);
            Block out{b.orig, {}};
            for (int a : b.elems)
                if (a >= m)
                    out.elems.push_back(a);
            return out;
        };
        auto lower = [](const Block & b) {
            int m = median(b.elems);
            Block out{b.orig, {}};
            for (int a : b.elems)
                if (a <= m)
                    out.elems.push_back(a);
            return out;
        };
        if (median(x.elems) >= median(y.elems))
            return {lower(y), upper(x)};
        return {lower(x), upper(y)};
    }

    // Returns blocks left to right. Follows the lemma's recursion: order the
    // first k-1 sets, split the rightmost against the new set; if the new
    // set lands above, append it, otherwise everything sits below the shrunk
    // rightmost block, which takes the final rank while the rest recurse.
    std::vector<Block> arrange(std::vector<Block> blocks)
    {
        std::size_t k = blocks.size();
        if (k == 1)
            return blocks;
        if (k == 2) {
            auto [left, right] = split_pair(blocks[0], blocks[1]);
            return {left, right};
        }

        Block last = std::move(blocks.back());
        blocks.pop_back();
        auto ordered = arrange(std::move(blocks));

        auto [left, right] = split_pair(ordered.back(), last);
        ordered.pop_back();
        if (right.orig == last.orig) {
            ordered.push_back(left);
            ordered.push_back(right);
            return ordered;
        }
        ordered.push_back(left);             // the shrunk new set, position unknown
        auto inner = arrange(std::move(ordered));
        inner.push_back(right);              // shrunk former-rightmost block, rank k
        return inner;
    }

}

CropResult crop(const std::vector<std::vector<int>> & sets)
{
    std::vector<Block> blocks;
    std::vector<int> all;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty())
            throw std::invalid_argument{"set " + std::to_string(i + 1) + " is empty"};
        Block b{int(i), sets[i]};
        std::sort(b.elems.begin(), b.elems.end());
        blocks.push_back(std::move(b));
        all.insert(all.end(), sets[i].begin(), sets[i].end());
    }
    if (blocks.empty())
        throw std::invalid_argument{"no input sets"};
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument{"input sets overlap"};

    auto ordered = arrange(std::move(blocks));

    CropResult result;
    result.subsets.resize(sets.size());
    result.perm.resize(sets.size());
    for (std::size_t rank = 0; rank < ordered.size(); ++rank) {
        result.subsets[ordered[rank].orig] = ordered[rank].elems;
        result.perm[ordered[rank].orig] = int(rank) + 1;
    }
    return result;
}

}
