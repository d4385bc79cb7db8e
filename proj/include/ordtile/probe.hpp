#ifndef ORDTILE_PROBE_HPP
#define ORDTILE_PROBE_HPP

#include "embed.hpp"
#include "graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordtile {

// G(n, p) with a platform-independent generator: identical seed gives an
// identical graph everywhere.
OrderedGraph random_ordered_graph(int n, double p, std::uint64_t seed);

// Mixes a master seed with a trial index; random_ordered_graph at the same
// (seed, trial) uses one uniform draw per vertex pair regardless of p, so a
// probability grid sees nested edge sets trial by trial.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt = 0);

struct ProbeRow {
    int n;
    double param;
    int trials;
    int successes;
    int timeouts;
    double mean_nodes;
    std::uint64_t seed;
};

enum class GridKind { EdgeProbability, MinDegreeTarget };

struct ProbeOptions {
    int trials = 50;
    std::uint64_t seed = 0;
    std::uint64_t node_budget = default_node_budget;
    int jobs = 1;
    double fixed_p = 0.5;                       // sampling density for min-degree grids
    std::optional<std::pair<int, int>> min_degree_band;   // rejection filter [lo, hi]
    int max_rejections = 10000;                 // per trial, then the probe aborts
};

// One oracle run as the probe performs it; exposed so sanity anchors
// (barrier graphs, complete graphs) can go through the same path.
TileResult probe_trial(const OrderedGraph & host, const OrderedGraph & pattern, std::uint64_t node_budget);

// Samples per grid point, runs the oracle, aggregates. Timeouts are
// reported separately and never counted as failures. Throws Error when the
// rejection budget for a min-degree band is exhausted.
std::vector<ProbeRow> threshold_probe(const OrderedGraph & pattern, int n, GridKind kind,
        const std::vector<double> & grid, const ProbeOptions & options);

// Columns exactly: n,param,trials,successes,timeouts,mean_nodes,seed.
std::string probe_csv(const std::vector<ProbeRow> & rows);

}

#endif
