#pragma once

#include "ttk/group.hpp"

#include <vector>

namespace ttk {

struct ElementClasses {
    std::vector<Elt> reps;              // one per class, reps[0] = 0
    std::vector<std::vector<Elt>> members;
    std::vector<int> class_of;          // element -> class index
    int size() const { return (int)reps.size(); }
};

ElementClasses element_classes(const Group& G);

// Complex character table with values in F_ell, ell == 1 (mod exponent(G)),
// ell > 2|G|, computed by simultaneous diagonalization of the class-sum
// matrices (Dixon's modular method). Degrees are lifted to honest integers.
struct CharacterTable {
    int64_t ell = 0;
    ElementClasses classes;
    std::vector<int> degrees;                 // chi(1), lifted
    std::vector<std::vector<int64_t>> values; // values[chi][class] in [0, ell)

    int num_chars() const { return (int)degrees.size(); }
    int64_t value(int chi, Elt g) const { return values[chi][classes.class_of[g]]; }
};

// smallest prime ell == 1 (mod exponent(G)) with ell > 2|G|
int64_t splitting_prime(const Group& G);

CharacterTable dixon_character_table(const Group& G, int order_bound = 512);

// invariant guards shared by Dixon and table ingestion: character count,
// degree consistency, sum of squared degrees, row orthogonality mod ell
void validate_table(const Group& G, const CharacterTable& t);

// Frobenius-Schur indicator, lifted to {-1, 0, 1}.
int frobenius_schur(const Group& G, const CharacterTable& t, int chi);

// Dimension function of a real irreducible: values dim_R V^H per subgroup
// class of `tab`, deduplicated (Adams conjugates collapse) and sorted by
// (dim, vector). `trivial_index` marks the all-ones function.
struct DimensionBasis {
    std::vector<std::vector<int64_t>> funcs; // per function, per subgroup class
    int trivial_index = -1;
};

DimensionBasis real_dimension_functions(const Group& G, const CharacterTable& t,
                                        const SubgroupClassTable& tab);

// fixed-point dimension of the (possibly reducible) character chi on H,
// (1/|H|) sum_{h in H} chi(h), lifted; guard-checked to lie in [0, 2|G|]
int64_t fixed_dim(const Group& G, const CharacterTable& t, int chi, const Subgroup& H);

} // namespace ttk
