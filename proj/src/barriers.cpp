#include "ordtile/barriers.hpp"
#include "ordtile/errors.hpp"
#include "ordtile/profile.hpp"

#include <string>

namespace ordtile {

const char * to_string(BarrierKind k)
{
    switch (k) {
        case BarrierKind::Space: return "space";
        case BarrierKind::Divisibility: return "divisibility";
        default: return "local";
    }
}

namespace {

    void require_divides(int h, int n)
    {
        if (n % h != 0)
            throw std::invalid_argument{"need h | n, got h = " + std::to_string(h) + ", n = " + std::to_string(n)};
    }

    // Complete join between every pair of consecutive interval parts.
    // bounds holds the last vertex of each part; parts are edgeless unless
    // listed in cliques.
    std::vector<Edge> join_of_intervals(const std::vector<int> & bounds, const std::vector<bool> & clique)
    {
        std::vector<Edge> edges;
        int lo = 1;
        std::vector<std::pair<int, int>> parts;
        for (int b : bounds) {
            if (b >= lo)
                parts.emplace_back(lo, b);
            else
                parts.emplace_back(lo, lo - 1);   // empty part
            lo = b + 1;
        }
        for (std::size_t a = 0; a < parts.size(); ++a) {
            if (clique[a])
                for (int i = parts[a].first; i <= parts[a].second; ++i)
                    for (int j = i + 1; j <= parts[a].second; ++j)
                        edges.emplace_back(i, j);
            for (std::size_t b = a + 1; b < parts.size(); ++b)
                for (int i = parts[a].first; i <= parts[a].second; ++i)
                    for (int j = parts[b].first; j <= parts[b].second; ++j)
                        edges.emplace_back(i, j);
        }
        return edges;
    }

}

BarrierCertificate space_barrier(const OrderedGraph & pattern, int ell, int n, bool mirror_side)
{
    if (mirror_side) {
        auto cert = space_barrier(mirror(pattern), ell, n, false);
        cert.graph = mirror(cert.graph);
        cert.claimed_min_degree = cert.graph.min_degree();
        cert.mirrored = true;
        return cert;
    }

    int h = pattern.n();
    require_divides(h, n);
    if (n < h)
        throw std::invalid_argument{"need n >= h"};
    auto alpha = alpha_plus_seq(pattern);
    int chi = int(alpha.size());
    if (ell < 1 || ell >= chi)
        throw std::invalid_argument{"ell must satisfy 1 <= ell < chi_lt = " + std::to_string(chi)};

    // s is exact under h | n; flooring keeps the counting argument otherwise.
    std::int64_t ap = alpha[ell - 1];
    int s = int(ap * n / h);

    // [1, s+1] split into ell consecutive edgeless intervals, larger parts
    // first; [s+2, n] is a clique; all parts pairwise completely joined.
    std::vector<int> bounds;
    int total = s + 1, base = total / ell, rem = total % ell, at = 0;
    for (int i = 0; i < ell; ++i) {
        at += base + (i < rem ? 1 : 0);
        bounds.push_back(at);
    }
    bounds.push_back(n);
    std::vector<bool> clique(ell + 1, false);
    clique[ell] = true;

    OrderedGraph g{n, join_of_intervals(bounds, clique)};
    int formula = int((std::int64_t(n) * (std::int64_t(ell) * h - ap)) / (std::int64_t(ell) * h)) - 1;
    return BarrierCertificate{BarrierKind::Space, g, g.min_degree(), formula, ell, false};
}

BarrierCertificate divisibility_barrier(const OrderedGraph & pattern, int n)
{
    int h = pattern.n();
    if (h < 2)
        throw std::invalid_argument{"no divisibility barrier for a single-vertex pattern"};
    require_divides(h, n);
    if (n < 2 * h)
        throw std::invalid_argument{"need n >= 2h"};
    if (! compute_profile(pattern).prop_b)
        throw PropertyBRequired{};

    int k = (n + 1) / 2;
    while (k % h == 0)
        --k;

    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            edges.emplace_back(i, j);
    for (int i = k + 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.emplace_back(i, j);

    OrderedGraph g{n, std::move(edges)};
    return BarrierCertificate{BarrierKind::Divisibility, g, g.min_degree(), n / 2 - 2, 0, false};
}

BarrierCertificate local_barrier(const OrderedGraph & pattern, int n)
{
    int h = pattern.n();
    require_divides(h, n);
    if (n < 2 * h)
        throw std::invalid_argument{"need n >= 2h"};
    auto profile = compute_profile(pattern);
    if (! profile.prop_c_last && ! profile.prop_c_first)
        throw PropertyCRequired{};

    if (! profile.prop_c_last) {
        // Only vertex 1 has Property C: mirror construction.
        auto cert = local_barrier(mirror(pattern), n);
        cert.graph = mirror(cert.graph);
        cert.claimed_min_degree = cert.graph.min_degree();
        cert.mirrored = true;
        return cert;
    }

    // Vertex h has Property C: join of edgeless [1, ceil(n/2)-1] and
    // [ceil(n/2), n-1], plus vertex n adjacent exactly to the second half.
    int mid = (n + 1) / 2;
    std::vector<Edge> edges;
    for (int i = 1; i < mid; ++i)
        for (int j = mid; j <= n - 1; ++j)
            edges.emplace_back(i, j);
    for (int j = mid; j <= n - 1; ++j)
        edges.emplace_back(j, n);

    OrderedGraph g{n, std::move(edges)};
    return BarrierCertificate{BarrierKind::Local, g, g.min_degree(), n / 2, 0, false};
}

}
