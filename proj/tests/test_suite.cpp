#include "ordtile/suite.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace ordtile;

TEST_CASE("default catalog passes the full battery")
{
    SuiteLimits limits;
    limits.barrier_max_n = 12;      // keep the unit run quick
    limits.equivalence_trials = 60;
    limits.crop_trials = 60;
    limits.duality_trials = 60;

    auto report = verify_suite(default_catalog(), limits);
    for (auto & check : report.checks) {
        CAPTURE(check.name);
        CAPTURE(check.pattern);
        CAPTURE(check.params);
        CHECK(! check.failed);
    }
    CHECK(report.overall_pass);
}

TEST_CASE("chi_lt 3 patterns are reported but skip classification checks")
{
    Catalog catalog;
    catalog.emplace_back("path3", OrderedGraph{3, {{1, 2}, {2, 3}}});

    SuiteLimits limits;
    limits.barrier_max_n = 6;
    limits.equivalence_trials = 20;
    limits.crop_trials = 20;
    limits.duality_trials = 20;

    auto report = verify_suite(catalog, limits);
    CHECK(report.overall_pass);

    bool skipped_bottle = false;
    for (auto & check : report.checks)
        if (check.name == "bottle-soundness" && check.outcome.rfind("skip", 0) == 0)
            skipped_bottle = true;
    CHECK(skipped_bottle);
}

TEST_CASE("empty catalog is an error")
{
    CHECK_THROWS_AS(verify_suite({}), std::invalid_argument);
}

TEST_CASE("overall pass flag mirrors the individual checks")
{
    SuiteLimits limits;
    limits.barrier_max_n = 6;
    limits.equivalence_trials = 10;
    limits.crop_trials = 10;
    limits.duality_trials = 10;

    auto report = verify_suite(default_catalog(), limits);
    bool any_failed = false;
    for (auto & check : report.checks)
        any_failed = any_failed || check.failed;
    CHECK(report.overall_pass == ! any_failed);
}
