#ifndef ORDTILE_SUITE_HPP
#define ORDTILE_SUITE_HPP

#include "catalog.hpp"
#include "embed.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ordtile {

struct SuiteCheck {
    std::string name;
    std::string pattern;
    std::string params;
    std::string outcome;    // "pass", "fail", or "skip: <why>"
    double seconds = 0.0;
    bool failed = false;
};

struct SuiteReport {
    std::vector<SuiteCheck> checks;
    bool overall_pass = true;   // true iff no check failed; skips do not fail
};

struct SuiteLimits {
    int barrier_max_n = 18;
    int oracle_confirm_max = 18;    // largest blow-up re-checked by the oracle
    int equivalence_trials = 300;
    int crop_trials = 300;
    int duality_trials = 200;
    std::uint64_t seed = 12345;
    std::uint64_t node_budget = default_node_budget;
};

// Runs the full invariant battery on a catalog of patterns: profile
// dualities and classification invariants, greedy-vs-exhaustive interval
// chromatic number, barrier non-tileability and degree formulas,
// bottlegraph soundness, oracle-vs-naive equivalence, crop bounds, and the
// Hajnal-Szemeredi degree corollary. Classification-dependent checks are
// skipped with a notice for patterns whose interval chromatic number is
// not 2.
SuiteReport verify_suite(const Catalog & catalog, const SuiteLimits & limits = {});

}

#endif
