#pragma once

#include "ttk/borel_smith.hpp"
#include "ttk/fp.hpp"
#include "ttk/group.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace ttk {

// ---------------------------------------------------------------------
// Chain complexes of free orbit-category modules.
//
// A summand is a transitive permutation module k[G/K], stored by its actual
// stabilizer subgroup K. A module map k[G/A] -> k[G/B] is stored as the image
// of the coset 1A: a coefficient vector on canonical coset representatives of
// B ("CosetVec"). Differentials of genuine orbit complexes are supported on
// A-fixed cosets only (stabilizers grow: g^{-1} A g <= B); duals produce
// merely equivariant maps, tracked by the orbit_level flag.
// ---------------------------------------------------------------------

using CosetVec = std::map<Elt, int>; // canonical coset rep -> coefficient mod p

struct OrbitModule {
    std::vector<Subgroup> summands;
    int size() const { return (int)summands.size(); }
};

struct Morphism {
    // (source summand, target summand) -> entry; absent means zero
    std::map<std::pair<int, int>, CosetVec> e;

    bool zero() const;
    const CosetVec* entry(int s, int t) const;
};

Morphism morphism_add(const Morphism& a, const Morphism& b, int p);
Morphism morphism_sub(const Morphism& a, const Morphism& b, int p);
Morphism morphism_scale(const Morphism& a, int c, int p);
// g after f (apply f first); dst supplies the target stabilizers used to
// re-canonicalize composite cosets
Morphism morphism_compose(const Group& G, const Morphism& g, const Morphism& f,
                          const OrbitModule& dst, int p);

struct OrbitComplex {
    GroupPtr G;
    int lo = 0;
    int hi = -1; // hi < lo encodes the zero complex
    std::vector<OrbitModule> mods;  // [i - lo]
    std::vector<Morphism> diffs;    // [i - lo] : degree i -> i-1 (index 0 empty)
    bool orbit_level = true;

    bool zero() const { return hi < lo; }
    const OrbitModule& mod(int i) const;
    const Morphism& diff(int i) const;
    int total_summands() const;
    int total_dim() const;
};

// d^2 = 0, coefficient reduction, coset canonicity, equivariance, and (for
// orbit_level complexes) the stabilizer condition.
void validate(const OrbitComplex& C);

// ---- plain constructions ----
OrbitComplex unit_complex(const GroupPtr& G, int degree = 0);
OrbitComplex free_summand_complex(const GroupPtr& G, const Subgroup& K, int degree);
OrbitComplex cone_of_identity(const GroupPtr& G, const Subgroup& K, int top_degree);
OrbitComplex direct_sum(const OrbitComplex& A, const OrbitComplex& B);
OrbitComplex shift(const OrbitComplex& C, int n);
OrbitComplex dual(const OrbitComplex& C);

// ---- dense linear algebra view ----
struct DenseBasis {
    int lo = 0, hi = -1;
    std::vector<std::vector<std::pair<int, Elt>>> elems; // per degree: (summand, coset rep)
    std::vector<std::map<std::pair<int, Elt>, int>> index;

    int dim(int i) const;
    int idx(int i, int summand, Elt coset) const;
};

DenseBasis dense_basis(const OrbitComplex& C);
// matrix of d_i : C_i -> C_{i-1} in the dense bases
FpMat dense_diff(const OrbitComplex& C, const DenseBasis& B, int i);
// matrix of an arbitrary morphism between modules of two complexes
FpMat dense_morphism(const Group& G, const Morphism& m, const OrbitModule& src,
                     const OrbitModule& dst, const DenseBasis& sb, int sdeg,
                     const DenseBasis& db, int ddeg, int p);

std::map<int, int> homology_dims(const OrbitComplex& C);
int total_homology_dim(const OrbitComplex& C);

// ---- tensor product ----
struct TensorSummand {
    int deg_a = 0; // degree of the left factor piece
    int a = 0, b = 0;
    Elt rep = 0; // canonical double coset representative
};

struct TensorResult {
    OrbitComplex cx;
    std::vector<std::vector<TensorSummand>> labels; // parallel to cx.mods
};

TensorResult tensor_labeled(const OrbitComplex& A, const OrbitComplex& B);
OrbitComplex tensor(const OrbitComplex& A, const OrbitComplex& B);

// dense index pairing: position of cx basis vector -> (deg_a, dense index in
// A at deg_a, dense index in B at deg-deg_a)
struct TensorPairing {
    std::vector<std::vector<std::tuple<int, int, int>>> pairs; // per cx degree
};
TensorPairing tensor_pairing(const TensorResult& T, const OrbitComplex& A, const OrbitComplex& B,
                             const DenseBasis& tb, const DenseBasis& ab, const DenseBasis& bb);

// ---- evaluation at a subgroup (modular fixed points) ----
struct Evaluated {
    OrbitComplex cx; // over W = W_G(H)
    WeylData wd;
    DenseBasis src_basis; // of the source complex
    DenseBasis dst_basis; // of cx
    std::vector<std::vector<int>> g2w; // per degree: source dense idx -> cx dense idx or -1
};

Evaluated evaluate(const OrbitComplex& C, const WeylData& wd, const Subgroup& H);
Evaluated evaluate(const OrbitComplex& C, const Subgroup& H); // computes W_G(H)

// ---- h-marks / endotriviality ----
SuperclassFunction h_marks(const OrbitComplex& C, const SubgroupClassTable& tab);
bool is_endotrivial(const OrbitComplex& C, const SubgroupClassTable& tab);

// ---- contractible summands and elimination ----
struct ContractibleWitness {
    int degree;     // degree of the fixed vector
    int summand;    // whose orbit sum has nonzero image
    int target;     // target summand of the nonzero block
};
std::optional<ContractibleWitness> has_contractible_summand(const OrbitComplex& C);

// chain maps between complexes as degreewise morphisms; shift +1 for homotopies
struct ComplexMap {
    int shift = 0;
    std::map<int, Morphism> comp; // keyed by source degree

    const Morphism* at(int deg) const;
};

struct EquivalenceData {
    ComplexMap pi;    // original -> minimized
    ComplexMap sigma; // minimized -> original
    ComplexMap h;     // original -> original, degree +1, id - sigma pi = dh + hd
};

struct Eliminated {
    OrbitComplex min;
    EquivalenceData eq;
};

Eliminated eliminate_contractibles(const OrbitComplex& C);

// exact verification helpers (used by tests and the elimination guard)
bool is_chain_map(const OrbitComplex& src, const OrbitComplex& dst, const ComplexMap& f);
bool equivalence_exact(const OrbitComplex& C, const OrbitComplex& M, const EquivalenceData& eq);

// ---- builders ----
// u_N for [G:N] = p: three-term k[G/N] -> k[G/N] -> k for p odd, two-term for
// p = 2 (spec form).
OrbitComplex builder_u(const GroupPtr& G, const Subgroup& N);
// generalized cyclic builder: G/N cyclic of any order >= 2; three-term with
// d2 = (sigma - 1), realizing the dimension function 2*[H <= N]
OrbitComplex builder_cyclic3(const GroupPtr& G, const Subgroup& N);
// kG -> k[G/H1] (+) k[G/H2] -> k with augmentation maps
OrbitComplex builder_dihedral_pair(const GroupPtr& G, const Subgroup& H1, const Subgroup& H2);
OrbitComplex builder_dihedral(const GroupPtr& G); // picks the two classes itself
// truncated minimal free resolution of k, degrees n..1 free + k in degree 0;
// endotrivial iff Omega^n k is one-dimensional (cyclic / quaternion quotients)
OrbitComplex builder_periodic(const GroupPtr& G, int n);
// inflation along a quotient projection: summand k[Q/Kbar] -> k[G/preimage]
OrbitComplex builder_inflate(const OrbitComplex& C, const GroupPtr& G, const WeylData& quotient);

// ---- realize the canonical basis by builders + user complexes ----
struct RealizedBasis {
    std::vector<SuperclassFunction> funcs;            // the canonical basis
    int trivial_index = -1;
    std::vector<std::optional<OrbitComplex>> complexes; // aligned with funcs
    std::vector<int> unrealized;                        // indices without complexes

    bool complete() const { return unrealized.empty(); }
    // indices of B(G): realized nontrivial basis elements
    std::vector<int> nontrivial_realized() const;
};

RealizedBasis realize_basis(const SubgroupClassTable& tab, const std::vector<SuperclassFunction>& basis,
                            int trivial_index, const std::vector<OrbitComplex>& user_complexes = {});

// ---- iota maps ----
// chain map k[degree] -> C whose image is sum of coeff * orbit-sum over the
// summands of C_degree
struct UnitMap {
    int degree = 0;
    std::vector<int> coeffs;
};

UnitMap iota(const OrbitComplex& C, const SubgroupClassTable& tab, const SuperclassFunction& hmarks,
             int class_idx);
bool iota_equal(const OrbitComplex& C, const SubgroupClassTable& tab, const SuperclassFunction& hmarks,
                int class_h, int class_k);

// dense image of a unit map / of a fixed vector under evaluation at H
std::vector<int> unit_map_dense(const OrbitComplex& C, const DenseBasis& B, const UnitMap& m);
std::vector<int> evaluate_vector(const Evaluated& ev, int degree, const std::vector<int>& dense_src);

// quasi-isomorphism test over k for a map k[deg] -> (complex of ev), i.e.
// exactness of the mapping cone after forgetting the group action
bool cone_exact_after_forget(const OrbitComplex& D, const DenseBasis& B, int degree,
                             const std::vector<int>& image_vec);

} // namespace ttk
