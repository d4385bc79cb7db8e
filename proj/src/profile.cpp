#include "ordtile/profile.hpp"
#include "ordtile/errors.hpp"

namespace ordtile {

const char * to_string(TilingCase c)
{
    switch (c) {
        case TilingCase::I: return "I";
        case TilingCase::II: return "II";
        case TilingCase::III: return "III";
        case TilingCase::IV: return "IV";
        default: return "Unclassified";
    }
}

Rational PatternProfile::alpha_star_checked() const
{
    if (! alpha_star)
        throw AlphaStarUndefined{};
    return *alpha_star;
}

std::vector<int> alpha_plus_seq(const OrderedGraph & pattern)
{
    int h = pattern.n();
    std::vector<int> seq;
    int prev = 0;
    while (prev < h) {
        int k = prev + 1;
        while (k + 1 <= h && pattern.independent_interval(prev + 1, k + 1))
            ++k;
        seq.push_back(k);
        prev = k;
    }
    return seq;
}

std::vector<int> alpha_minus_seq(const OrderedGraph & pattern)
{
    int h = pattern.n();
    std::vector<int> seq;
    int prev = h + 1;
    while (prev > 1) {
        int k = prev - 1;
        while (k - 1 >= 1 && pattern.independent_interval(k - 1, prev - 1))
            --k;
        seq.push_back(k);
        prev = k;
    }
    return seq;
}

namespace {

    bool edge_inside(const OrderedGraph & g, int a, int b)
    {
        return a <= b && ! g.independent_interval(a, b);
    }

}

PatternProfile compute_profile(const OrderedGraph & pattern)
{
    PatternProfile p;
    int h = pattern.n();
    p.h = h;
    p.alpha_plus = alpha_plus_seq(pattern);
    p.alpha_minus = alpha_minus_seq(pattern);
    p.chi_lt = int(p.alpha_plus.size());

    if (p.chi_lt >= 2) {
        Rational best = Rational{1};
        for (int ell = 1; ell < p.chi_lt; ++ell) {
            best = min(best, Rational{p.alpha_plus[ell - 1], std::int64_t(ell) * h});
            best = min(best, Rational{h - p.alpha_minus[ell - 1] + 1, std::int64_t(ell) * h});
        }
        p.alpha_star = best;
        p.lower_bound_coeff = Rational{1} - best;
    }

    p.s = 0;
    for (int v = 1; v < h; ++v)
        if (pattern.has_edge(v, h)) {
            p.s = v;
            break;
        }
    p.l = h + 1;
    for (int v = h; v > 1; --v)
        if (pattern.has_edge(1, v)) {
            p.l = v;
            break;
        }

    p.prop_a = pattern.independent_interval(1, h / 2 + 1) &&
        pattern.independent_interval((h + 1) / 2, h);

    p.prop_b = true;
    for (int i = 1; i < h; ++i) {
        bool crossed = false;
        for (auto [u, v] : pattern.edges())
            if (u <= i && v > i) {
                crossed = true;
                break;
            }
        if (! crossed) {
            p.prop_b = false;
            break;
        }
    }

    p.prop_c_last = p.s >= 1 && edge_inside(pattern, p.s, h - 1);
    p.prop_c_first = p.l <= h && edge_inside(pattern, 2, p.l);

    if (p.chi_lt == 2 && h >= 2) {
        if (! p.prop_a) {
            p.tiling_case = TilingCase::I;
            p.threshold_coeff = *p.lower_bound_coeff;
        }
        else if (p.prop_b) {
            p.tiling_case = TilingCase::II;
            p.threshold_coeff = Rational{1, 2};
        }
        else if (p.prop_c_first || p.prop_c_last) {
            p.tiling_case = TilingCase::III;
            p.threshold_coeff = Rational{1, 2};
        }
        else {
            p.tiling_case = TilingCase::IV;
            p.threshold_coeff = *p.lower_bound_coeff;
        }
    }

    return p;
}

}
