#pragma once

#include "ttk/context.hpp"
#include "ttk/twisted.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace ttk {

// Combinatorial probes of the closed points m_H of the Balmer spectrum via
// the residue functors F^H = Res o Psi^H.

// F^K applied to the unit map m: k[deg] -> C is an isomorphism in D_b(k)
// iff the mapping cone of the evaluated map is exact over k.
bool residue_iso(const OrbitComplex& C, const SubgroupClassTable& tab, const UnitMap& m, int class_k);

// entry (H, K) = AND over realized B(G) of residue_iso(iota^H_C, K); encodes
// m_K in U(H). `partial` is set when unrealized basis elements were skipped.
struct UMembership {
    std::vector<std::vector<bool>> entry;
    bool partial = false;
    std::vector<int> used_basis; // indices of B(G) elements that entered
};

UMembership u_membership_matrix(const TTContext& ctx);

// f in comp_G(m_H): Psi^H(f) fails to be a quasi-isomorphism. The general
// form takes a membership predicate on the H-local cohomology class
// (Remark-style primes); the default is the closed point (positive degrees
// and zero classes belong to the ideal).
bool comp_membership(const TwistedRing& ring, const TwistedElement& f, int ci);
bool comp_membership(const TwistedRing& ring, const TwistedElement& f, int ci,
                     const std::function<bool(int degree, const CohomologyClass&)>& in_prime);

struct SeparationWitness {
    int basis_index; // element of B(G) with residue_iso(iota^H, K) false
};

// a basis element separating the (non-conjugate) classes H and K; throws
// NoWitnessFound when the realized subset cannot separate them
SeparationWitness separation_witness(const TTContext& ctx, int class_h, int class_k);
std::optional<SeparationWitness> try_separation_witness(const TTContext& ctx, int class_h,
                                                        int class_k);

} // namespace ttk
