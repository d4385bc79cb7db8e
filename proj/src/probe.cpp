#include "ordtile/probe.hpp"
#include "ordtile/errors.hpp"

#include <atomic>
#include <cstdio>
#include <random>
#include <thread>

namespace ordtile {

namespace {

    std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    double uniform01(std::mt19937_64 & rng)
    {
        return double(rng() >> 11) * 0x1.0p-53;
    }

}

OrderedGraph random_ordered_graph(int n, double p, std::uint64_t seed)
{
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument{"edge probability must lie in [0, 1]"};
    std::mt19937_64 rng{seed};
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (uniform01(rng) < p)
                edges.emplace_back(i, j);
    return OrderedGraph{n, std::move(edges)};
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt)
{
    return splitmix64(splitmix64(seed ^ splitmix64(trial)) ^ splitmix64(~attempt));
}

TileResult probe_trial(const OrderedGraph & host, const OrderedGraph & pattern, std::uint64_t node_budget)
{
    return perfect_tiling(host, pattern, node_budget);
}

namespace {

    struct TrialOutcome {
        bool success = false;
        bool timeout = false;
        std::uint64_t nodes = 0;
    };

    OrderedGraph sample_host(int n, double p, const ProbeOptions & options, std::uint64_t trial,
            std::optional<std::pair<int, int>> band)
    {
        for (int attempt = 0; attempt < options.max_rejections; ++attempt) {
            auto g = random_ordered_graph(n, p, trial_seed(options.seed, trial, std::uint64_t(attempt)));
            if (! band)
                return g;
            int d = g.min_degree();
            if (d >= band->first && d <= band->second)
                return g;
        }
        throw Error{"rejection budget exhausted: no sample hit the min-degree band after " +
            std::to_string(options.max_rejections) + " attempts"};
    }

    ProbeRow run_grid_point(const OrderedGraph & pattern, int n, double param, double p,
            std::optional<std::pair<int, int>> band, const ProbeOptions & options)
    {
        std::vector<TrialOutcome> outcomes(options.trials);
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::atomic<bool> failed{false};

        auto worker = [&]() {
            while (true) {
                int t = next.fetch_add(1);
                if (t >= options.trials || failed.load())
                    return;
                try {
                    auto host = sample_host(n, p, options, std::uint64_t(t), band);
                    auto result = probe_trial(host, pattern, options.node_budget);
                    outcomes[t].success = result.status == TileStatus::Tiling;
                    outcomes[t].timeout = result.status == TileStatus::Timeout;
                    outcomes[t].nodes = result.nodes;
                }
                catch (...) {
                    if (! failed.exchange(true))
                        failure = std::current_exception();
                    return;
                }
            }
        };

        int jobs = std::max(1, options.jobs);
        if (jobs == 1) {
            worker();
        }
        else {
            std::vector<std::thread> pool;
            for (int j = 0; j < jobs; ++j)
                pool.emplace_back(worker);
            for (auto & th : pool)
                th.join();
        }
        if (failed.load())
            std::rethrow_exception(failure);

        ProbeRow row{n, param, options.trials, 0, 0, 0.0, options.seed};
        std::uint64_t total_nodes = 0;
        for (auto & o : outcomes) {
            row.successes += o.success ? 1 : 0;
            row.timeouts += o.timeout ? 1 : 0;
            total_nodes += o.nodes;
        }
        row.mean_nodes = options.trials > 0 ? double(total_nodes) / options.trials : 0.0;
        return row;
    }

}

std::vector<ProbeRow> threshold_probe(const OrderedGraph & pattern, int n, GridKind kind,
        const std::vector<double> & grid, const ProbeOptions & options)
{
    if (n % pattern.n() != 0)
        throw std::invalid_argument{"host size must be divisible by the pattern size"};

    std::vector<ProbeRow> rows;
    for (double param : grid) {
        double p = kind == GridKind::EdgeProbability ? param : options.fixed_p;
        auto band = options.min_degree_band;
        if (kind == GridKind::MinDegreeTarget)
            band = std::pair{int(param), n};
        rows.push_back(run_grid_point(pattern, n, param, p, band, options));
    }
    return rows;
}

std::string probe_csv(const std::vector<ProbeRow> & rows)
{
    std::string out = "n,param,trials,successes,timeouts,mean_nodes,seed\n";
    char buf[160];
    for (auto & r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%g,%d,%d,%d,%.3f,%llu\n",
                r.n, r.param, r.trials, r.successes, r.timeouts, r.mean_nodes,
                static_cast<unsigned long long>(r.seed));
        out += buf;
    }
    return out;
}

}
