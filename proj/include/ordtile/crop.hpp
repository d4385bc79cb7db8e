#ifndef ORDTILE_CROP_HPP
#define ORDTILE_CROP_HPP

#include <vector>

namespace ordtile {

// Output of the median-splitting extraction: subsets[i] is a subset of the
// i-th input set with |subsets[i]| >= |input[i]| / 2^(2^(k-2)), and perm[i]
// is the 1-based rank of subsets[i] in the block order (rank(i) < rank(j)
// implies every element of subsets[i] is below every element of subsets[j]).
struct CropResult {
    std::vector<std::vector<int>> subsets;
    std::vector<int> perm;
};

// Input sets must be pairwise disjoint and non-empty; elements need not be
// sorted. k = 1 returns the set unchanged.
CropResult crop(const std::vector<std::vector<int>> & sets);

}

#endif
