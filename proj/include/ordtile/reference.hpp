#ifndef ORDTILE_REFERENCE_HPP
#define ORDTILE_REFERENCE_HPP

#include "embed.hpp"
#include "graph.hpp"

namespace ordtile {

// Brute-force cross-check for perfect_tiling: enumerates every partition of
// [n] into h-sets and tests each block against the pattern's edge list
// directly. Shares no search machinery with the backtracking oracle; meant
// for desk-scale hosts only (n up to about 12).
TileResult perfect_tiling_by_partition_enumeration(const OrderedGraph & host, const OrderedGraph & pattern);

}

#endif
