#pragma once

#include "ttk/fp.hpp"
#include "ttk/group.hpp"

#include <vector>

namespace ttk {

// Truncated minimal free resolution of k over the group algebra kW of a
// p-group W (local algebra, rad = augmentation ideal). P_i = kW^{ranks[i]},
// dense basis (generator j, group element w) at index j*|W| + w.
// Differentials are stored as generator images: diff[i][j] is the dense
// image in P_{i-1} of generator j of P_i. Minimality: images lie in rad*P,
// so Hom(P_i, k) has zero differential and Ext^i = k^{ranks[i]}.
struct MinResolution {
    GroupPtr W;
    int p = 2;
    std::vector<int> ranks;                          // 0..d_max
    std::vector<std::vector<std::vector<int>>> diff; // diff[i] for i >= 1

    int length() const { return (int)ranks.size() - 1; }
    int dim(int i) const { return ranks[i] * W->order; }
    // dense image of an arbitrary vector of P_i under d_i
    std::vector<int> apply_diff(int i, const std::vector<int>& v) const;
    // action of w on a dense vector of P_i
    std::vector<int> act(int i, Elt w, const std::vector<int>& v) const;
};

MinResolution min_resolution(const GroupPtr& W, int d_max);

// Degree-n cohomology class of W on the stored resolution: a functional on
// the generators of P_n (all such are cocycles, none are coboundaries).
struct CohomologyClass {
    GroupPtr W;
    int degree = 0;
    std::vector<int> vec; // length ranks[degree]; empty vec of degree<0 is zero

    bool is_zero() const;
};

// Yoneda (cup) product by lifting b to a chain map of the resolution and
// composing with a. Exact and independent of the lift choices.
CohomologyClass yoneda_product(const MinResolution& R, const CohomologyClass& a,
                               const CohomologyClass& b);

} // namespace ttk
