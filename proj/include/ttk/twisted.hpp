#pragma once

#include "ttk/context.hpp"
#include "ttk/orbit.hpp"
#include "ttk/resolution.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace ttk {

// A twist is a multiplicity vector over the canonical basis (the entry at
// the trivial basis element stays 0; twists range over B(G)).
using Twist = std::vector<int>;

// Homogeneous element of H^{s,q}(G): a fixed cycle in the minimal model of
// k(q) at degree -s, stored in orbit-sum coordinates (one per summand).
struct TwistedElement {
    Twist q;
    int s = 0; // shift, <= 0 for nonzero components
    std::vector<int> coeffs;

    bool is_zero() const;
};

// Minimal model of k(q) with the equivalence data needed to transport
// vectors between M(q) and the full tensor tower of basis complexes.
struct TwistChart {
    Twist q;
    OrbitComplex M;
    DenseBasis MB;
    SuperclassFunction hmark; // h-marks of k(q) (sums of basis h-marks)

    // recursion (absent when |q| = 0): M(q) = eliminate(M(q - e_c) (x) B_c)
    std::shared_ptr<const TwistChart> prev;
    int last = -1; // basis index of the peeled factor
    OrbitComplex T; // tensor(M(prev), B_last)
    DenseBasis TB;
    TensorPairing pairing;
    EquivalenceData eq; // between T and M
};

// Fixed-cycle vector in a single homological degree of the tensor tower,
// indexed by tuples of (degree, dense index) per factor.
struct TowerVec {
    int degree = 0;
    std::map<std::vector<std::pair<int, int>>, int> coeffs;
};

class TwistedRing {
public:
    explicit TwistedRing(const TTContext& ctx) : ctx_(ctx) {}

    const TTContext& ctx() const { return ctx_; }
    int prime() const { return ctx_.G->prime; }
    // number of basis elements (twist vector length)
    int twist_len() const { return (int)ctx_.basis.size(); }

    std::shared_ptr<const TwistChart> model(const Twist& q) const;

    int hom_dimension(const Twist& q, int s) const;
    std::vector<TwistedElement> basis_of_component(const Twist& q, int s) const;

    TwistedElement zero(const Twist& q, int s) const;
    TwistedElement unit() const;
    TwistedElement add(const TwistedElement& f, const TwistedElement& g) const;
    TwistedElement multiply(const TwistedElement& f, const TwistedElement& g) const;

    // the fraction class at subgroup class ci, on the cached Weyl resolution
    CohomologyClass psi_hat(const TwistedElement& f, int ci) const;
    bool is_nilpotent(const TwistedElement& f) const;

    // h-mark of the twist k(q) (additive in the basis h-marks)
    SuperclassFunction twist_hmark(const Twist& q) const;

    // dense vector of f in M(q) at degree -s
    std::vector<int> dense_of(const TwistedElement& f) const;
    // denominator map of Def dh: the iota product for k(q) at class ci,
    // transported into M(q) at degree twist_hmark(q)[ci]
    std::vector<int> iota_product_dense(const Twist& q, int ci) const;

    // tower transports (exposed for tests)
    TowerVec to_tower(const TwistChart& E, int degree, const std::vector<int>& dense) const;
    std::vector<int> from_tower(const TwistChart& E, const TowerVec& t) const;

private:
    const TTContext& ctx_;
    // held across chart construction (recursively) so each twist is built
    // at most once even under concurrent callers
    mutable std::recursive_mutex mu_;
    mutable std::map<Twist, std::shared_ptr<const TwistChart>> cache_;

    std::vector<int> factors(const Twist& q) const;
};

} // namespace ttk
