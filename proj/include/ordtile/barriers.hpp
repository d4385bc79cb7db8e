#ifndef ORDTILE_BARRIERS_HPP
#define ORDTILE_BARRIERS_HPP

#include "graph.hpp"

namespace ordtile {

enum class BarrierKind { Space, Divisibility, Local };

const char * to_string(BarrierKind k);

// An extremal construction together with its minimum degree: the actual
// degree of the built graph and the lower bound the construction promises.
struct BarrierCertificate {
    BarrierKind kind;
    OrderedGraph graph;
    int claimed_min_degree;     // min_degree(graph), computed
    int formula_value;          // the promised lower bound
    int ell = 0;                // space barriers: which interval index
    bool mirrored = false;      // construction ran on mirror(H)
};

// Iterated join of ell edgeless intervals partitioning [1, s+1] (s =
// alpha_plus[ell] * n / h) with a clique on the rest. Blocks perfect
// H-tilings because every copy of H meets [s+1] in at most alpha_plus[ell]
// vertices. mirror_side builds the alpha_minus-side construction via
// mirror(H). Requires 1 <= ell < chi_lt(H), h | n, n >= h.
BarrierCertificate space_barrier(const OrderedGraph & pattern, int ell, int n, bool mirror_side = false);

// Disjoint cliques K_k + K_{n-k} with k the largest integer <= ceil(n/2)
// not divisible by h. Requires Property B, h | n, n >= 2h.
BarrierCertificate divisibility_barrier(const OrderedGraph & pattern, int n);

// Join of two edgeless halves plus one vertex attached to a single half,
// so that vertex cannot lie in any copy of H. Requires Property C at an
// endpoint of H, h | n, n >= 2h.
BarrierCertificate local_barrier(const OrderedGraph & pattern, int n);

}

#endif
