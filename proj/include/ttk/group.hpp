#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ttk {

using Elt = int; // element index, 0 = identity

// Finite p-group stored by full multiplication table. Permutation images are
// kept for the generators only (ingestion/debugging); all algebra goes
// through the table.
struct Group {
    int order = 1;
    int prime = 2;
    std::vector<Elt> mult_table;      // order*order, mult_table[a*order+b] = a*b
    std::vector<Elt> inv_table;       // order
    std::vector<Elt> generators;      // element indices
    int perm_degree = 0;              // 0 if not built from permutations
    std::vector<std::vector<int>> generator_perms; // images on 0..degree-1

    Elt mult(Elt a, Elt b) const { return mult_table[(size_t)a * order + b]; }
    Elt inv(Elt a) const { return inv_table[a]; }
    Elt conj(Elt g, Elt x) const { return mult(mult(g, x), inv(g)); } // g x g^-1
    int elt_order(Elt a) const;
    int exponent() const;
    bool is_abelian() const;

    // sanity checks per the type invariants; throws math_guard on failure
    void validate() const;
};

using GroupPtr = std::shared_ptr<const Group>;

// Subgroup: sorted element list; doubles as its own canonical key.
struct Subgroup {
    std::vector<Elt> elems; // sorted, contains 0

    int order() const { return (int)elems.size(); }
    bool contains(Elt x) const;
    bool contains_set(const Subgroup& other) const;
    bool operator==(const Subgroup& o) const { return elems == o.elems; }
    bool operator<(const Subgroup& o) const;
};

Subgroup closure(const Group& G, std::vector<Elt> gens);
Subgroup conjugate_subgroup(const Group& G, Elt g, const Subgroup& H);
Subgroup normalizer(const Group& G, const Subgroup& H);
Subgroup centralizer(const Group& G, const Subgroup& H);
Subgroup intersect(const Subgroup& A, const Subgroup& B);
bool is_normal(const Group& G, const Subgroup& H);

// Canonical coset representative of gK: the minimal element of the set gK.
Elt coset_canon(const Group& G, Elt g, const Subgroup& K);
// Canonical reps of all left cosets of K, ascending.
std::vector<Elt> coset_reps(const Group& G, const Subgroup& K);

struct SubgroupClass {
    Subgroup rep;                  // canonical representative (minimal key)
    std::vector<Subgroup> members; // all conjugates, sorted
    Subgroup normalizer_of_rep;
};

// Quotient N/H realized as a Group (cosets sorted by canonical rep, identity
// coset first), plus the projection N -> W on the elements of N.
struct WeylData {
    GroupPtr W;
    std::vector<Elt> proj;      // indexed by elements of the AMBIENT group; -1 outside N
    std::vector<Elt> section;   // coset index -> minimal representative in N
};

struct SubgroupClassTable {
    GroupPtr G;
    std::vector<SubgroupClass> classes; // sorted by (order, rep key)
    std::vector<std::vector<bool>> leq; // leq[i][j]: class i <=_G class j
    std::vector<WeylData> weyl;         // per class, W_G(rep) = N_G(rep)/rep

    int num_classes() const { return (int)classes.size(); }
    // class index of an arbitrary subgroup (scan of the class members)
    int class_of(const Subgroup& H) const;
};

// --- operations -------------------------------------------------------

// Closure of permutation generators on 1..degree; fails if the result is not
// a p-group or exceeds the bound.
GroupPtr group_from_permutations(int degree, const std::vector<std::vector<std::vector<int>>>& generator_cycles,
                                 int order_bound = 512);

// Catalog names: C{p^k}, E{p}r{r}, D{2^k} (k>=3), Q8, SG32_43, and "x"-joined
// direct products of those.
GroupPtr catalog(const std::string& name);

SubgroupClassTable enumerate_subgroups(const GroupPtr& G, int order_bound = 512);

// W_G(H) = N_G(H)/H with projection; H need not be normal.
WeylData weyl_group(const GroupPtr& G, const Subgroup& H);

// Quotient by a normal subgroup (wrapper asserting normality).
WeylData quotient_group(const GroupPtr& G, const Subgroup& N);

enum class SubqKind { OrderP, ElemAbRank2, Cyclic4Chain, Quaternion8Chain };

// Witness for a Borel-Smith-relevant subquotient:
//  - OrderP / ElemAbRank2: pair S <| T with T/S of order p resp. C_p x C_p;
//    mid is unused, intermediates lists the X with S < X < T (rank-2 case).
//  - chains: H <| K <| L <= N_G(H) with [K:H] = 2 and L/H iso C4 resp. Q8
//    (K/H is the unique order-2 subgroup of L/H); stored as sub=H, mid=K,
//    top=L.
struct SubquotientWitness {
    Subgroup sub;  // S or H
    Subgroup mid;  // K (chains only)
    Subgroup top;  // T or L
    std::vector<Subgroup> intermediates; // rank-2 case: S < X < T
};

std::vector<SubquotientWitness> find_subquotients(const SubgroupClassTable& tab, SubqKind kind);

// cycle-notation helpers for the group file format
std::vector<std::vector<std::vector<int>>> parse_cycles_lines(const std::vector<std::string>& lines, int degree);
std::string cycles_to_string(const std::vector<int>& perm_image);

} // namespace ttk
