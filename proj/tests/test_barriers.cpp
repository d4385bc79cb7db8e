#include "ordtile/barriers.hpp"
#include "ordtile/embed.hpp"
#include "ordtile/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace ordtile;

namespace {

    const OrderedGraph p213{3, {{1, 2}, {1, 3}}};
    const OrderedGraph k2{2, {{1, 2}}};
    const OrderedGraph a14{4, {{1, 4}}};
    const OrderedGraph c6{6, {{1, 5}, {2, 5}}};
    const OrderedGraph c6m{6, {{2, 5}, {2, 6}}};

}

TEST_CASE("space barrier structure for 213 at n = 6")
{
    auto cert = space_barrier(p213, 1, 6);
    CHECK(cert.kind == BarrierKind::Space);
    CHECK(cert.graph.n() == 6);
    CHECK(cert.graph.independent_interval(1, 3));
    for (int i = 4; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            CHECK(cert.graph.has_edge(i, j));
    for (int i = 1; i <= 3; ++i)
        for (int j = 4; j <= 6; ++j)
            CHECK(cert.graph.has_edge(i, j));
    CHECK(cert.claimed_min_degree == 3);
    CHECK(cert.formula_value == 3);
}

TEST_CASE("space barrier structure for K2 at n = 6")
{
    auto cert = space_barrier(k2, 1, 6);
    CHECK(cert.graph.independent_interval(1, 4));
    CHECK(cert.graph.has_edge(5, 6));
    CHECK(cert.claimed_min_degree == 2);
    CHECK(cert.formula_value == 2);
}

TEST_CASE("space barrier rejects bad arguments")
{
    CHECK_THROWS_AS(space_barrier(OrderedGraph::empty(3), 1, 6), std::invalid_argument);
    CHECK_THROWS_AS(space_barrier(p213, 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(space_barrier(p213, 0, 6), std::invalid_argument);
    CHECK_THROWS_AS(space_barrier(p213, 1, 7), std::invalid_argument);
}

TEST_CASE("space barrier handles the null clique at n = h")
{
    auto cert = space_barrier(a14, 1, 4);
    CHECK(cert.graph.edge_count() == 0);
    CHECK(cert.claimed_min_degree == 0);
    CHECK(cert.formula_value == 0);
}

TEST_CASE("mirror-side space barrier")
{
    OrderedGraph late{5, {{3, 5}}};   // alpha-minus side strictly smaller
    auto plain = space_barrier(late, 1, 10);
    auto mirrored = space_barrier(late, 1, 10, true);
    CHECK(mirrored.mirrored);
    CHECK(mirror(mirrored.graph) == space_barrier(mirror(late), 1, 10).graph);
    CHECK(perfect_tiling(plain.graph, late).status == TileStatus::NoTiling);
    CHECK(perfect_tiling(mirrored.graph, late).status == TileStatus::NoTiling);
}

TEST_CASE("every embedding into a space barrier stays within the bound")
{
    // |V(H) meet [s+1]| <= alpha_plus[ell] for every copy, checked by full
    // enumeration of embeddings.
    for (int n : {6, 9, 12}) {
        auto cert = space_barrier(p213, 1, n);
        int s = 1 * n / 3;
        struct Collector {
            const OrderedGraph & host;
            const OrderedGraph & pattern;
            int s, bound;
            bool ok = true;

            void scan(std::vector<int> image, int pos)
            {
                if (pos > pattern.n()) {
                    int inside = 0;
                    for (int v : image)
                        if (v <= s + 1)
                            ++inside;
                    ok = ok && inside <= bound;
                    return;
                }
                for (int v = pos == 1 ? 1 : image[pos - 2] + 1; v <= host.n(); ++v) {
                    bool fits = true;
                    for (auto [i, j] : pattern.edges())
                        if (j == pos && ! host.has_edge(image[i - 1], v))
                            fits = false;
                    if (fits) {
                        image.push_back(v);
                        scan(image, pos + 1);
                        image.pop_back();
                    }
                }
            }
        };
        Collector c{cert.graph, p213, s, 1};
        c.scan({}, 1);
        CHECK(c.ok);
    }
}

TEST_CASE("divisibility barrier for A14")
{
    auto cert8 = divisibility_barrier(a14, 8);
    CHECK(cert8.claimed_min_degree == 2);
    CHECK(cert8.formula_value == 2);
    // K3 on [1,3] disjoint from K5 on [4,8]
    CHECK(cert8.graph.has_edge(1, 3));
    CHECK(! cert8.graph.has_edge(3, 4));
    CHECK(cert8.graph.has_edge(4, 8));

    auto cert12 = divisibility_barrier(a14, 12);
    CHECK(cert12.claimed_min_degree == 4);
    CHECK(! cert12.graph.has_edge(5, 6));
    CHECK(cert12.graph.has_edge(1, 5));
    CHECK(cert12.graph.has_edge(6, 12));
}

TEST_CASE("divisibility barrier needs Property B but not Property A")
{
    // 213 lacks Property A yet has Property B, so the call succeeds with
    // k = 2.
    auto cert = divisibility_barrier(p213, 6);
    CHECK(cert.graph.has_edge(1, 2));
    CHECK(! cert.graph.has_edge(2, 3));
    CHECK(cert.graph.has_edge(3, 6));

    CHECK_THROWS_AS(divisibility_barrier(c6, 12), PropertyBRequired);
    CHECK_THROWS_AS(divisibility_barrier(a14, 10), std::invalid_argument);
    CHECK_THROWS_AS(divisibility_barrier(a14, 4), std::invalid_argument);
}

TEST_CASE("local barrier for the mirrored C6 pattern at n = 12")
{
    auto cert = local_barrier(c6m, 12);
    CHECK(cert.claimed_min_degree == 6);
    CHECK(cert.formula_value == 6);
    CHECK(! cert.mirrored);
    // join of empty [1,5] and empty [6,11]; vertex 12 sees exactly [6,11]
    CHECK(cert.graph.independent_interval(1, 5));
    CHECK(cert.graph.independent_interval(6, 11));
    for (int i = 1; i <= 5; ++i)
        for (int j = 6; j <= 11; ++j)
            CHECK(cert.graph.has_edge(i, j));
    for (int j = 6; j <= 11; ++j)
        CHECK(cert.graph.has_edge(j, 12));
    for (int i = 1; i <= 5; ++i)
        CHECK(! cert.graph.has_edge(i, 12));
}

TEST_CASE("local barrier mirrors when only vertex 1 has Property C")
{
    auto cert = local_barrier(c6, 12);
    CHECK(cert.mirrored);
    CHECK(cert.graph == mirror(local_barrier(c6m, 12).graph));
    CHECK(cert.claimed_min_degree == 6);

    CHECK_THROWS_AS(local_barrier(a14, 8), PropertyCRequired);
}

TEST_CASE("barriers really block perfect tilings at small sizes")
{
    CHECK(perfect_tiling(space_barrier(p213, 1, 9).graph, p213).status == TileStatus::NoTiling);
    CHECK(perfect_tiling(space_barrier(k2, 1, 10).graph, k2).status == TileStatus::NoTiling);
    CHECK(perfect_tiling(divisibility_barrier(p213, 6).graph, p213).status == TileStatus::NoTiling);
    CHECK(perfect_tiling(local_barrier(c6m, 12).graph, c6m).status == TileStatus::NoTiling);
    CHECK(perfect_tiling(local_barrier(c6, 12).graph, c6).status == TileStatus::NoTiling);
}

TEST_CASE("space barrier degree sits within one of the formula")
{
    for (auto & [pattern, name] : {std::pair<const OrderedGraph &, const char *>{p213, "213"},
            {k2, "K2"}, {a14, "A14"}, {c6, "C6"}}) {
        int h = pattern.n();
        for (int n = h; n <= 18; n += h) {
            auto cert = space_barrier(pattern, 1, n);
            CAPTURE(name);
            CAPTURE(n);
            CHECK(cert.claimed_min_degree >= cert.formula_value);
            CHECK(cert.claimed_min_degree <= cert.formula_value + 1);
        }
    }
}
