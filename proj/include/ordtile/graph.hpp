#ifndef ORDTILE_GRAPH_HPP
#define ORDTILE_GRAPH_HPP

#include "bitset.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordtile {

using Edge = std::pair<int, int>;

// Graph on vertex set [1, n] whose vertex order is the label order.
// Immutable after construction; edges are stored sorted with i < j, and a
// per-vertex neighbour bitset is kept alongside for the search inner loops.
class OrderedGraph {
public:
    // Validates endpoints, i < j, and rejects duplicates. Edge order in the
    // input is irrelevant.
    OrderedGraph(int n, std::vector<Edge> edges);

    static OrderedGraph empty(int n) { return OrderedGraph{n, {}}; }

    int n() const { return n_; }

    int edge_count() const { return int(edges_.size()); }

    const std::vector<Edge> & edges() const { return edges_; }

    bool has_edge(int i, int j) const { return adj_[i].test(j); }

    const Bitset & neighbours(int v) const { return adj_[v]; }

    int degree(int v) const { return adj_[v].count(); }

    int min_degree() const;

    // True when no edge has both endpoints in [a, b].
    bool independent_interval(int a, int b) const;

    friend bool operator==(const OrderedGraph & a, const OrderedGraph & b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<Bitset> adj_;
};

// Relabels vertex i as n+1-i. An involution; preserves the degree multiset.
OrderedGraph mirror(const OrderedGraph & g);

// Exchange text format: header "n m", then m lines "i j" with i < j.
// Lines starting with '#' are skipped, so certificate headers round-trip.
// Throws ParseError with a 1-based line number on malformed input.
OrderedGraph parse_ordered_graph(std::string_view text);

// Canonical form: lexicographically sorted edges, LF-terminated lines.
std::string to_text(const OrderedGraph & g);

// JSON mirror of the exchange format: {"n": ..., "edges": [[i, j], ...]}.
OrderedGraph graph_from_json(const std::string & text);
std::string graph_to_json(const OrderedGraph & g);

}

#endif
