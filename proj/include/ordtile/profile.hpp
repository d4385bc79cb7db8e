#ifndef ORDTILE_PROFILE_HPP
#define ORDTILE_PROFILE_HPP

#include "graph.hpp"
#include "rational.hpp"

#include <optional>
#include <vector>

namespace ordtile {

// The four minimum-degree regimes for patterns of interval chromatic
// number 2; Unclassified covers every other interval chromatic number.
enum class TilingCase { I, II, III, IV, Unclassified };

const char * to_string(TilingCase c);

struct PatternProfile {
    int h = 0;
    int chi_lt = 0;
    std::vector<int> alpha_plus;
    std::vector<int> alpha_minus;
    std::optional<Rational> alpha_star;         // unset iff chi_lt == 1
    int s = 0;                                  // smallest neighbour of h; 0 when h isolated
    int l = 0;                                  // largest neighbour of 1; h+1 when 1 isolated
    bool prop_a = false;
    bool prop_b = false;
    bool prop_c_first = false;                  // vertex 1 has Property C
    bool prop_c_last = false;                   // vertex h has Property C
    TilingCase tiling_case = TilingCase::Unclassified;
    std::optional<Rational> threshold_coeff;    // set iff chi_lt == 2
    std::optional<Rational> lower_bound_coeff;  // 1 - alpha*, the space-barrier coefficient

    // Throws AlphaStarUndefined for patterns of interval chromatic number 1.
    Rational alpha_star_checked() const;
};

// Greedy maximal independent intervals swept from the left. The last entry
// is h and the length is the interval chromatic number.
std::vector<int> alpha_plus_seq(const OrderedGraph & pattern);

// Mirror sweep from the right; the last entry is 1.
std::vector<int> alpha_minus_seq(const OrderedGraph & pattern);

PatternProfile compute_profile(const OrderedGraph & pattern);

}

#endif
