#pragma once

#include "ttk/borel_smith.hpp"
#include "ttk/chartable.hpp"
#include "ttk/group.hpp"
#include "ttk/orbit.hpp"
#include "ttk/resolution.hpp"

#include <memory>
#include <mutex>

namespace ttk {

// Per-group session state: the subgroup table, character data, the canonical
// basis with its realizations, and memoized iota maps / Weyl resolutions.
struct TTContext {
    GroupPtr G;
    SubgroupClassTable subs;
    CharacterTable chart;
    std::vector<SuperclassFunction> basis;
    int trivial_index = -1;
    RealizedBasis realized;

    static TTContext make(const GroupPtr& G, const std::vector<OrbitComplex>& user_complexes = {});

    // h-marks of the realized basis element bi (== basis[bi]; asserted once)
    const SuperclassFunction& hmark_of(int bi) const;
    // iota of realized basis element bi at subgroup class ci (cached)
    const UnitMap& iota_of(int bi, int ci) const;
    const OrbitComplex& complex_of(int bi) const;
    // truncated minimal resolution over W_G(rep of class ci), length >= d
    std::shared_ptr<const MinResolution> resolution(int ci, int d) const;

private:
    struct Caches {
        std::mutex mu;
        std::map<std::pair<int, int>, UnitMap> iota;
        std::map<int, std::shared_ptr<const MinResolution>> res;
    };
    std::shared_ptr<Caches> caches_ = std::make_shared<Caches>();
};

} // namespace ttk
