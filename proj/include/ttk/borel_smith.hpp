#pragma once

#include "ttk/chartable.hpp"
#include "ttk/group.hpp"
#include "ttk/intmat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ttk {

// Integer vector indexed by the subgroup classes of a fixed table.
using SuperclassFunction = std::vector<int64_t>;

bool is_effective(const SubgroupClassTable& tab, const SuperclassFunction& f);

struct BsWitness {
    std::string condition; // "parity", "cyclic4", "quaternion8", "rank2"
    SubquotientWitness where;
    std::string detail;
};

struct BsResult {
    bool ok = true;
    std::optional<BsWitness> witness; // first failure
};

// The three Borel-Smith conditions. Subquotient lists are computed from the
// table (and cached by the caller via precomputed lists when batching).
BsResult is_borel_smith(const SubgroupClassTable& tab, const SuperclassFunction& f);

struct BsConditionSets {
    std::vector<SubquotientWitness> order_p;     // p odd
    std::vector<SubquotientWitness> rank2;
    std::vector<SubquotientWitness> cyclic4;     // p = 2
    std::vector<SubquotientWitness> quaternion8; // p = 2
};

BsConditionSets bs_condition_sets(const SubgroupClassTable& tab);
BsResult is_borel_smith(const SubgroupClassTable& tab, const BsConditionSets& sets,
                        const SuperclassFunction& f);

struct BasisReport {
    bool all_borel_smith = true;
    bool independent = true;
    bool lattice_equal = true;
    std::vector<int> failing; // indices of basis functions failing a condition
    int constraint_rank = 0;
    IntMat basis_hnf;
    IntMat solution_hnf;
};

// Checks (a) every basis function is Borel-Smith, (b) Z-independence,
// (c) HNF equality between the basis lattice and the solution lattice of the
// full Borel-Smith constraint system (congruences via auxiliary integers).
BasisReport verify_basis(const SubgroupClassTable& tab, const std::vector<SuperclassFunction>& basis);

// Unordered pairs of distinct classes agreeing on every basis function.
std::vector<std::pair<int, int>> indistinguishable_pairs(const SubgroupClassTable& tab,
                                                         const std::vector<SuperclassFunction>& basis);

} // namespace ttk
