#ifndef ORDTILE_BOTTLE_HPP
#define ORDTILE_BOTTLE_HPP

#include "embed.hpp"
#include "graph.hpp"
#include "rational.hpp"

#include <vector>

namespace ordtile {

// Complete multipartite template whose every interval-labelled blow-up
// carries a perfect H-tiling. For patterns without Property A the parts
// are [r, p, ..., p] (r omitted when 0, a copies of p, h = a*p + r); with
// Property A they are [r, p] with p = alpha* * h and r = h - p <= p.
struct Bottlegraph {
    std::vector<int> part_sizes;   // part 0 is the remainder part when r > 0
    bool has_prop_a = false;
    int p = 0;
    int r = 0;
    int a = 0;                     // number of size-p parts (no-Property-A branch)
    bool mirrored = false;         // built for mirror(H)
};

// Left-to-right placement of the template parts: order[k] is the part
// index occupying the k-th interval of the blow-up.
struct IntervalLabeling {
    std::vector<int> order;
};

// Requires chi_lt(H) == 2; throws ChiLtNotTwo otherwise. When the alpha
// minus side is strictly smaller the construction runs on mirror(H) and
// the result is flagged mirrored.
Bottlegraph bottlegraph(const OrderedGraph & pattern);

// Critical chromatic number (chi - 1) * total / (total - sigma) of a
// complete multipartite graph, exact; needs at least two parts.
Rational chi_cr(const std::vector<int> & part_sizes);

// Ordered blow-up: each part becomes a consecutive interval of
// t * part_size independent vertices, intervals placed in labeling order,
// distinct parts completely joined.
OrderedGraph blowup(const Bottlegraph & b, const IntervalLabeling & phi, int t);

// All placements of the parts; with dedup_by_size, one representative per
// distinct size sequence.
std::vector<IntervalLabeling> interval_labelings(const Bottlegraph & b, bool dedup_by_size = false);

struct BlowupTiling {
    int t;
    Tiling tiling;
};

// The witness t for this labeling and an explicit perfect H-tiling of
// blowup(b, phi, t), built by the type-I/type-II decomposition when the
// remainder part is leftmost and by a single spanning copy otherwise.
BlowupTiling constructive_blowup_tiling(const OrderedGraph & pattern, const Bottlegraph & b,
        const IntervalLabeling & phi);

}

#endif
