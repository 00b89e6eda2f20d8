#include "ttk/context.hpp"

#include "ttk/error.hpp"

namespace ttk {

TTContext TTContext::make(const GroupPtr& G, const std::vector<OrbitComplex>& user_complexes) {
    TTContext ctx;
    ctx.G = G;
    ctx.subs = enumerate_subgroups(G);
    ctx.chart = dixon_character_table(*G);
    DimensionBasis db = real_dimension_functions(*G, ctx.chart, ctx.subs);
    ctx.basis = db.funcs;
    ctx.trivial_index = db.trivial_index;
    ctx.realized = realize_basis(ctx.subs, ctx.basis, ctx.trivial_index, user_complexes);
    return ctx;
}

const SuperclassFunction& TTContext::hmark_of(int bi) const { return basis[bi]; }

const OrbitComplex& TTContext::complex_of(int bi) const {
    if (!realized.complexes[bi])
        throw math_guard("UnrealizedBasisElement",
                         "basis element " + std::to_string(bi) + " has no realized complex");
    return *realized.complexes[bi];
}

const UnitMap& TTContext::iota_of(int bi, int ci) const {
    std::lock_guard<std::mutex> lk(caches_->mu);
    auto key = std::make_pair(bi, ci);
    auto it = caches_->iota.find(key);
    if (it != caches_->iota.end()) return it->second;
    const OrbitComplex& C = complex_of(bi);
    UnitMap m = iota(C, subs, basis[bi], ci);
    return caches_->iota.emplace(key, std::move(m)).first->second;
}

std::shared_ptr<const MinResolution> TTContext::resolution(int ci, int d) const {
    std::lock_guard<std::mutex> lk(caches_->mu);
    auto it = caches_->res.find(ci);
    if (it != caches_->res.end() && (it->second->length() >= d || it->second->ranks.back() == 0))
        return it->second;
    auto R = std::make_shared<MinResolution>(min_resolution(subs.weyl[ci].W, d));
    caches_->res[ci] = R;
    return R;
}

} // namespace ttk
