#include "ttk/spectrum.hpp"

#include "ttk/error.hpp"

namespace ttk {

bool residue_iso(const OrbitComplex& C, const SubgroupClassTable& tab, const UnitMap& m,
                 int class_k) {
    DenseBasis B = dense_basis(C);
    Evaluated ev = evaluate(C, tab.weyl[class_k], tab.classes[class_k].rep);
    std::vector<int> v = evaluate_vector(ev, m.degree, unit_map_dense(C, B, m));
    return cone_exact_after_forget(ev.cx, ev.dst_basis, m.degree, v);
}

UMembership u_membership_matrix(const TTContext& ctx) {
    UMembership out;
    int nc = ctx.subs.num_classes();
    out.used_basis = ctx.realized.nontrivial_realized();
    out.partial = !ctx.realized.complete();
    out.entry.assign(nc, std::vector<bool>(nc, true));
    for (int bi : out.used_basis) {
        const OrbitComplex& C = ctx.complex_of(bi);
        for (int h = 0; h < nc; ++h) {
            const UnitMap& im = ctx.iota_of(bi, h);
            std::vector<std::pair<int, bool>> row(nc);
            std::exception_ptr eptr = nullptr;
#pragma omp parallel for schedule(dynamic)
            for (int k = 0; k < nc; ++k) {
                try {
                    row[k] = {k, residue_iso(C, ctx.subs, im, k)};
                } catch (...) {
#pragma omp critical
                    if (!eptr) eptr = std::current_exception();
                }
            }
            if (eptr) std::rethrow_exception(eptr);
            for (auto& [k, ok] : row)
                if (!ok) out.entry[h][k] = false;
        }
    }
    return out;
}

bool comp_membership(const TwistedRing& ring, const TwistedElement& f, int ci) {
    // closed point: the prime is the irrelevant ideal of H^*(W), so f maps
    // into it unless its class lands in degree 0 and is nonzero
    return comp_membership(ring, f, ci, [](int degree, const CohomologyClass& c) {
        return degree != 0 || c.is_zero();
    });
}

bool comp_membership(const TwistedRing& ring, const TwistedElement& f, int ci,
                     const std::function<bool(int degree, const CohomologyClass&)>& in_prime) {
    SuperclassFunction h = ring.twist_hmark(f.q);
    int n = (int)h[ci] + f.s;
    CohomologyClass c = ring.psi_hat(f, ci);
    return in_prime(n, c);
}

std::optional<SeparationWitness> try_separation_witness(const TTContext& ctx, int class_h,
                                                        int class_k) {
    for (int bi : ctx.realized.nontrivial_realized()) {
        const OrbitComplex& C = ctx.complex_of(bi);
        const UnitMap& im = ctx.iota_of(bi, class_h);
        if (!residue_iso(C, ctx.subs, im, class_k)) return SeparationWitness{bi};
    }
    return std::nullopt;
}

SeparationWitness separation_witness(const TTContext& ctx, int class_h, int class_k) {
    if (class_h == class_k)
        throw invalid_input("ShapeMismatch", "separation witness needs distinct classes");
    auto w = try_separation_witness(ctx, class_h, class_k);
    if (!w)
        throw math_guard("NoWitnessFound",
                         "no realized basis element separates classes " + std::to_string(class_h) +
                             " and " + std::to_string(class_k));
    return *w;
}

} // namespace ttk
