#ifndef ORDTILE_EMBED_HPP
#define ORDTILE_EMBED_HPP

#include "graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ordtile {

// Order-preserving embedding of a pattern on [h] into a host on [n]:
// image is strictly increasing and every pattern edge maps to a host edge.
struct Embedding {
    std::vector<int> image;
};

// Vertex-disjoint embeddings; perfect when the images cover all of [n].
struct Tiling {
    std::vector<Embedding> blocks;
};

enum class TileStatus { Tiling, NoTiling, NotDivisible, Timeout };

const char * to_string(TileStatus s);

// NoTiling is an exhaustive-search guarantee. A budget abort is reported
// as Timeout and never conflated with NoTiling.
struct TileResult {
    TileStatus status;
    std::optional<Tiling> tiling;   // present iff status == Tiling
    std::uint64_t nodes = 0;        // backtrack nodes expanded
};

inline constexpr std::uint64_t default_node_budget = 100'000'000;

// Lexicographically smallest embedding image, or nullopt. Deterministic.
std::optional<Embedding> find_embedding(const OrderedGraph & host, const OrderedGraph & pattern);

// Number of embeddings in lexicographic image order, truncated at cap.
std::int64_t count_embeddings(const OrderedGraph & host, const OrderedGraph & pattern, std::int64_t cap);

// Complete backtracking search for a perfect tiling: the smallest uncovered
// vertex must start some block, so each level branches only over blocks
// whose smallest image element is that vertex.
TileResult perfect_tiling(const OrderedGraph & host, const OrderedGraph & pattern,
        std::uint64_t node_budget = default_node_budget);

// Certificate check: disjoint blocks covering exactly [1, n], each a valid
// embedding. Independent of the search path that produced the tiling.
bool verify_tiling(const OrderedGraph & host, const OrderedGraph & pattern, const Tiling & t);

}

#endif
