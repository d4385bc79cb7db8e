#include "ordtile/suite.hpp"
#include "ordtile/barriers.hpp"
#include "ordtile/bottle.hpp"
#include "ordtile/crop.hpp"
#include "ordtile/errors.hpp"
#include "ordtile/profile.hpp"
#include "ordtile/probe.hpp"
#include "ordtile/reference.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace ordtile {

namespace {

    struct Recorder {
        SuiteReport & report;

        void run(const std::string & name, const std::string & pattern, const std::string & params,
                const std::function<bool()> & body)
        {
            auto started = std::chrono::steady_clock::now();
            SuiteCheck check{name, pattern, params, "pass", 0.0, false};
            try {
                if (! body()) {
                    check.outcome = "fail";
                    check.failed = true;
                }
            }
            catch (const std::exception & e) {
                check.outcome = std::string{"fail: "} + e.what();
                check.failed = true;
            }
            check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            report.overall_pass = report.overall_pass && ! check.failed;
            report.checks.push_back(std::move(check));
        }

        void skip(const std::string & name, const std::string & pattern, const std::string & params,
                const std::string & why)
        {
            report.checks.push_back(SuiteCheck{name, pattern, params, "skip: " + why, 0.0, false});
        }
    };

    // Minimum number of independent intervals over all 2^(h-1) compositions
    // of [h]; the independent cross-check for the greedy sweep.
    int chi_lt_by_composition(const OrderedGraph & pattern)
    {
        int h = pattern.n();
        int best = h;
        for (unsigned cuts = 0; cuts < (1u << (h - 1)); ++cuts) {
            int parts = 0, lo = 1;
            bool ok = true;
            for (int v = 1; v <= h && ok; ++v) {
                bool boundary = v == h || ((cuts >> (v - 1)) & 1);
                if (boundary) {
                    ++parts;
                    ok = pattern.independent_interval(lo, v);
                    lo = v + 1;
                }
            }
            if (ok)
                best = std::min(best, parts);
        }
        return best;
    }

    bool profile_duality_holds(const OrderedGraph & pattern)
    {
        auto p = compute_profile(pattern);
        auto q = compute_profile(mirror(pattern));
        if (p.chi_lt != q.chi_lt)
            return false;
        for (int i = 0; i < p.chi_lt; ++i)
            if (q.alpha_plus[i] != p.h + 1 - p.alpha_minus[i])
                return false;
        if (p.alpha_star != q.alpha_star || p.tiling_case != q.tiling_case)
            return false;
        if (p.chi_lt >= 2 && p.prop_a != (*p.alpha_star > Rational{1, 2}))
            return false;
        if (p.threshold_coeff &&
                *p.threshold_coeff != Rational{1, 2} && *p.threshold_coeff != *p.lower_bound_coeff)
            return false;
        // An edge at either extreme pins alpha* to 1/h exactly.
        if (p.chi_lt >= 2 && (pattern.has_edge(1, 2) || pattern.has_edge(p.h - 1, p.h)) &&
                *p.alpha_star != Rational{1, p.h})
            return false;
        return true;
    }

    // Host sizes for the non-tileability battery, kept small enough that
    // the exhaustive oracle answers each instance in well under a second.
    std::vector<int> barrier_sizes(int h, int n_max)
    {
        if (h == 4)
            return {8, 12, 16};
        if (h >= 6)
            return h <= n_max / 2 ? std::vector<int>{2 * h} : std::vector<int>{};
        std::vector<int> out;
        for (int n = h; n <= n_max; n += h)
            out.push_back(n);
        return out;
    }

    bool crop_result_ok(const std::vector<std::vector<int>> & sets, const CropResult & r)
    {
        std::size_t k = sets.size();
        double loss = k >= 2 ? std::pow(2.0, std::pow(2.0, double(k) - 2.0)) : 1.0;
        for (std::size_t i = 0; i < k; ++i) {
            if (r.subsets[i].empty())
                return false;
            if (double(r.subsets[i].size()) * loss < double(sets[i].size()))
                return false;
            for (int x : r.subsets[i]) {
                bool member = false;
                for (int y : sets[i])
                    member = member || x == y;
                if (! member)
                    return false;
            }
        }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (r.perm[i] < r.perm[j])
                    for (int x : r.subsets[i])
                        for (int y : r.subsets[j])
                            if (x >= y)
                                return false;
        return true;
    }

}

SuiteReport verify_suite(const Catalog & catalog, const SuiteLimits & limits)
{
    if (catalog.empty())
        throw std::invalid_argument{"nothing to verify: catalog is empty"};

    SuiteReport report;
    Recorder rec{report};
    std::mt19937_64 rng{limits.seed};

    for (auto & [name, pattern] : catalog) {
        auto profile = compute_profile(pattern);
        int h = pattern.n();

        rec.run("profile-invariants", name, "", [&] { return profile_duality_holds(pattern); });

        rec.run("chi-greedy-vs-exhaustive", name, "", [&] {
            return profile.chi_lt == chi_lt_by_composition(pattern);
        });

        // Barrier constructions: min-degree formulas, then exhaustive
        // non-tileability at every valid size in range.
        if (profile.chi_lt >= 2) {
            for (int n : barrier_sizes(h, limits.barrier_max_n)) {
                for (bool mirror_side : {false, true}) {
                    std::ostringstream ps;
                    ps << "space ell=1 n=" << n << (mirror_side ? " mirror" : "");
                    rec.run("barrier-degree", name, ps.str(), [&] {
                        auto cert = space_barrier(pattern, 1, n, mirror_side);
                        return cert.claimed_min_degree >= cert.formula_value &&
                            cert.claimed_min_degree <= cert.formula_value + 1;
                    });
                    rec.run("barrier-notiling", name, ps.str(), [&] {
                        auto cert = space_barrier(pattern, 1, n, mirror_side);
                        return perfect_tiling(cert.graph, pattern, limits.node_budget).status ==
                            TileStatus::NoTiling;
                    });
                }
            }
        }
        else {
            rec.skip("barrier-notiling", name, "space", "chi_lt < 2, no space barrier");
        }

        for (int n : barrier_sizes(h, limits.barrier_max_n)) {
            if (n < 2 * h)
                continue;
            std::ostringstream ps;
            ps << "n=" << n;
            if (profile.prop_b && h >= 2) {
                rec.run("barrier-degree", name, "divisibility " + ps.str(), [&] {
                    auto cert = divisibility_barrier(pattern, n);
                    return cert.claimed_min_degree >= cert.formula_value;
                });
                rec.run("barrier-notiling", name, "divisibility " + ps.str(), [&] {
                    auto cert = divisibility_barrier(pattern, n);
                    return perfect_tiling(cert.graph, pattern, limits.node_budget).status ==
                        TileStatus::NoTiling;
                });
            }
            if (profile.prop_c_first || profile.prop_c_last) {
                rec.run("barrier-degree", name, "local " + ps.str(), [&] {
                    auto cert = local_barrier(pattern, n);
                    return cert.claimed_min_degree == cert.formula_value;
                });
                rec.run("barrier-notiling", name, "local " + ps.str(), [&] {
                    auto cert = local_barrier(pattern, n);
                    return perfect_tiling(cert.graph, pattern, limits.node_budget).status ==
                        TileStatus::NoTiling;
                });
            }
        }

        // Bottlegraph soundness: every labeling's constructive tiling
        // verifies, chi_cr matches 1/alpha*, and small blow-ups are
        // re-confirmed by the oracle.
        if (profile.chi_lt == 2) {
            rec.run("bottle-chi-cr", name, "", [&] {
                auto b = bottlegraph(pattern);
                return chi_cr(b.part_sizes) == Rational{1} / *profile.alpha_star;
            });
            auto b = bottlegraph(pattern);
            for (auto & phi : interval_labelings(b)) {
                std::ostringstream ps;
                ps << "labeling";
                for (int idx : phi.order)
                    ps << ' ' << idx;
                rec.run("bottle-soundness", name, ps.str(), [&] {
                    auto bt = constructive_blowup_tiling(pattern, b, phi);
                    auto host = blowup(b, phi, bt.t);
                    if (! verify_tiling(host, pattern, bt.tiling))
                        return false;
                    if (host.n() <= limits.oracle_confirm_max &&
                            perfect_tiling(host, pattern, limits.node_budget).status != TileStatus::Tiling)
                        return false;
                    return true;
                });
            }
        }
        else {
            rec.skip("bottle-soundness", name, "",
                    "chi_lt = " + std::to_string(profile.chi_lt) + ", classification not applicable");
        }

        // Degree corollary: complete and complete h-partite hosts at the
        // Hajnal-Szemeredi degree all tile.
        rec.run("hs-corollary", name, "n<=12", [&] {
            for (int n = h; n <= 12; n += h) {
                std::vector<Edge> complete;
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        complete.emplace_back(i, j);
                OrderedGraph kn{n, complete};
                if (perfect_tiling(kn, pattern, limits.node_budget).status != TileStatus::Tiling)
                    return false;

                if (h >= 2) {
                    int m = n / h;
                    std::vector<Edge> cross;
                    for (int i = 1; i <= n; ++i)
                        for (int j = i + 1; j <= n; ++j)
                            if ((i - 1) / m != (j - 1) / m)
                                cross.emplace_back(i, j);
                    OrderedGraph partite{n, cross};
                    if (partite.min_degree() * h < (h - 1) * n)
                        return false;
                    if (perfect_tiling(partite, pattern, limits.node_budget).status != TileStatus::Tiling)
                        return false;
                }
            }
            return true;
        });
    }

    // Oracle agreement with the partition-enumeration reference on random
    // small instances.
    rec.run("oracle-vs-naive", "-", "trials=" + std::to_string(limits.equivalence_trials), [&] {
        const int pattern_sizes[] = {2, 3, 5};
        for (int trial = 0; trial < limits.equivalence_trials; ++trial) {
            int h = pattern_sizes[rng() % 3];
            int n = int(rng() % 10) + 1;
            auto pattern = random_ordered_graph(h, 0.5, rng());
            auto host = random_ordered_graph(n, 0.2 + 0.6 * double(rng() % 100) / 99.0, rng());
            auto fast = perfect_tiling(host, pattern, limits.node_budget);
            auto slow = perfect_tiling_by_partition_enumeration(host, pattern);
            if (fast.status != slow.status)
                return false;
            if (fast.status == TileStatus::Tiling &&
                    (! verify_tiling(host, pattern, *fast.tiling) || ! verify_tiling(host, pattern, *slow.tiling)))
                return false;
        }
        return true;
    });

    rec.run("crop-bounds", "-", "trials=" + std::to_string(limits.crop_trials), [&] {
        for (int trial = 0; trial < limits.crop_trials; ++trial) {
            int k = 2 + int(rng() % 3);
            int n = 20 + int(rng() % 181);
            std::vector<int> universe(n);
            std::iota(universe.begin(), universe.end(), 1);
            std::shuffle(universe.begin(), universe.end(), rng);
            std::vector<std::vector<int>> sets(k);
            std::size_t at = 0;
            for (int i = 0; i < k; ++i) {
                int size = 1 + int(rng() % (n / (2 * k)));
                for (int c = 0; c < size; ++c)
                    sets[i].push_back(universe[at++]);
            }
            if (! crop_result_ok(sets, crop(sets)))
                return false;
        }
        return true;
    });

    rec.run("profile-duality-random", "-", "trials=" + std::to_string(limits.duality_trials), [&] {
        for (int trial = 0; trial < limits.duality_trials; ++trial) {
            int h = 2 + int(rng() % 9);
            auto pattern = random_ordered_graph(h, 0.15 + 0.5 * double(rng() % 100) / 99.0, rng());
            if (! profile_duality_holds(pattern))
                return false;
        }
        return true;
    });

    return report;
}

}
