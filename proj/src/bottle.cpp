#include "ordtile/bottle.hpp"
#include "ordtile/errors.hpp"
#include "ordtile/profile.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ordtile {

Bottlegraph bottlegraph(const OrderedGraph & pattern)
{
    auto profile = compute_profile(pattern);
    if (profile.chi_lt != 2)
        throw ChiLtNotTwo{profile.chi_lt};

    int h = profile.h;
    int left = profile.alpha_plus[0];
    int right = h - profile.alpha_minus[0] + 1;

    Bottlegraph b;
    b.p = std::min(left, right);
    b.mirrored = right < left;
    b.has_prop_a = profile.prop_a;

    if (b.has_prop_a) {
        b.r = h - b.p;
        b.part_sizes = {b.r, b.p};
    }
    else {
        b.a = h / b.p;
        b.r = h % b.p;
        if (b.r > 0)
            b.part_sizes.push_back(b.r);
        b.part_sizes.insert(b.part_sizes.end(), b.a, b.p);
    }
    return b;
}

Rational chi_cr(const std::vector<int> & part_sizes)
{
    if (part_sizes.size() < 2)
        throw std::invalid_argument{"chi_cr needs at least two parts"};
    std::int64_t total = 0;
    int sigma = part_sizes.front();
    for (int s : part_sizes) {
        if (s < 1)
            throw std::invalid_argument{"part sizes must be positive"};
        total += s;
        sigma = std::min(sigma, s);
    }
    return Rational{(std::int64_t(part_sizes.size()) - 1) * total, total - sigma};
}

OrderedGraph blowup(const Bottlegraph & b, const IntervalLabeling & phi, int t)
{
    if (t < 1)
        throw std::invalid_argument{"blow-up factor must be positive"};
    int parts = int(b.part_sizes.size());
    if (int(phi.order.size()) != parts)
        throw std::invalid_argument{"labeling order length mismatch"};

    std::vector<std::pair<int, int>> intervals;   // [first, last] per position
    int at = 0;
    for (int k = 0; k < parts; ++k) {
        int size = t * b.part_sizes[phi.order[k]];
        intervals.emplace_back(at + 1, at + size);
        at += size;
    }

    std::vector<Edge> edges;
    for (int x = 0; x < parts; ++x)
        for (int y = x + 1; y < parts; ++y)
            for (int i = intervals[x].first; i <= intervals[x].second; ++i)
                for (int j = intervals[y].first; j <= intervals[y].second; ++j)
                    edges.emplace_back(i, j);
    return OrderedGraph{at, std::move(edges)};
}

std::vector<IntervalLabeling> interval_labelings(const Bottlegraph & b, bool dedup_by_size)
{
    int parts = int(b.part_sizes.size());
    std::vector<int> order(parts);
    std::iota(order.begin(), order.end(), 0);

    std::vector<IntervalLabeling> out;
    std::set<std::vector<int>> seen_shapes;
    do {
        if (dedup_by_size) {
            std::vector<int> shape;
            for (int idx : order)
                shape.push_back(b.part_sizes[idx]);
            if (! seen_shapes.insert(shape).second)
                continue;
        }
        out.push_back(IntervalLabeling{order});
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

namespace {

    // t = 1 branch: the blow-up has exactly h vertices and the identity
    // image spans a copy of H.
    BlowupTiling spanning_copy(const OrderedGraph & pattern, const Bottlegraph & b,
            const IntervalLabeling & phi)
    {
        auto host = blowup(b, phi, 1);
        std::vector<int> image(pattern.n());
        std::iota(image.begin(), image.end(), 1);
        BlowupTiling result{1, Tiling{{Embedding{image}}}};
        if (! verify_tiling(host, pattern, result.tiling))
            throw Error{"internal: spanning copy is not an embedding"};
        return result;
    }

    BlowupTiling unmirrored_tiling(const OrderedGraph & pattern, const Bottlegraph & b,
            const IntervalLabeling & phi)
    {
        if (b.has_prop_a || b.r == 0 || phi.order[0] != 0)
            return spanning_copy(pattern, b, phi);

        // Remainder part leftmost: blow up by t = lcm(p, r)/r and decompose
        // into c/p type-I sets (p vertices in each position but the last,
        // which gets r) and c/r - c/p type-II sets (nothing from position 0,
        // p from the middle positions, p + r from the last).
        int p = b.p, r = b.r, a = b.a;
        int c = std::lcm(p, r);
        int t = c / r;
        auto host = blowup(b, phi, t);

        std::vector<int> interval_start(a + 1), next_free(a + 1);
        int at = 0;
        for (int k = 0; k <= a; ++k) {
            interval_start[k] = at + 1;
            next_free[k] = at + 1;
            at += t * b.part_sizes[phi.order[k]];
        }

        auto take = [&](int position, int count, std::vector<int> & image) {
            for (int i = 0; i < count; ++i)
                image.push_back(next_free[position]++);
        };

        Tiling tiling;
        int type_one = c / p, type_two = c / r - c / p;
        for (int block = 0; block < type_one; ++block) {
            std::vector<int> image;
            for (int k = 0; k < a; ++k)
                take(k, p, image);
            take(a, r, image);
            tiling.blocks.push_back(Embedding{image});
        }
        for (int block = 0; block < type_two; ++block) {
            std::vector<int> image;
            for (int k = 1; k < a; ++k)
                take(k, p, image);
            take(a, p + r, image);
            tiling.blocks.push_back(Embedding{image});
        }

        if (! verify_tiling(host, pattern, tiling))
            throw Error{"internal: type decomposition is not a perfect tiling"};
        return BlowupTiling{t, std::move(tiling)};
    }

}

BlowupTiling constructive_blowup_tiling(const OrderedGraph & pattern, const Bottlegraph & b,
        const IntervalLabeling & phi)
{
    if (! b.mirrored)
        return unmirrored_tiling(pattern, b, phi);

    // The template was built for mirror(H): tile the reversed labeling with
    // the mirrored pattern, then map the certificate back through mirror.
    IntervalLabeling reversed{std::vector<int>(phi.order.rbegin(), phi.order.rend())};
    auto sub = unmirrored_tiling(mirror(pattern), b, reversed);

    int total = sub.t * pattern.n();
    Tiling back;
    for (auto & block : sub.tiling.blocks) {
        std::vector<int> image;
        for (auto it = block.image.rbegin(); it != block.image.rend(); ++it)
            image.push_back(total + 1 - *it);
        back.blocks.push_back(Embedding{image});
    }
    std::sort(back.blocks.begin(), back.blocks.end(),
            [](const Embedding & x, const Embedding & y) { return x.image[0] < y.image[0]; });

    if (! verify_tiling(blowup(b, phi, sub.t), pattern, back))
        throw Error{"internal: mirrored tiling did not map back"};
    return BlowupTiling{sub.t, std::move(back)};
}

}
