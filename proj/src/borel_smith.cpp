#include "ttk/borel_smith.hpp"

#include "ttk/error.hpp"

#include <set>
#include <sstream>

namespace ttk {

bool is_effective(const SubgroupClassTable& tab, const SuperclassFunction& f) {
    int n = tab.num_classes();
    if ((int)f.size() != n) throw invalid_input("ShapeMismatch", "superclass function length");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (tab.leq[i][j] && f[i] < f[j]) return false;
    return true;
}

BsConditionSets bs_condition_sets(const SubgroupClassTable& tab) {
    BsConditionSets s;
    if (tab.G->prime != 2) s.order_p = find_subquotients(tab, SubqKind::OrderP);
    s.rank2 = find_subquotients(tab, SubqKind::ElemAbRank2);
    if (tab.G->prime == 2) {
        s.cyclic4 = find_subquotients(tab, SubqKind::Cyclic4Chain);
        s.quaternion8 = find_subquotients(tab, SubqKind::Quaternion8Chain);
    }
    return s;
}

namespace {

int64_t eval_at(const SubgroupClassTable& tab, const SuperclassFunction& f, const Subgroup& H) {
    return f[tab.class_of(H)];
}

std::string describe(const SubgroupClassTable& tab, const Subgroup& H) {
    std::ostringstream os;
    os << "class " << tab.class_of(H) << " (|H|=" << H.order() << ")";
    return os.str();
}

} // namespace

BsResult is_borel_smith(const SubgroupClassTable& tab, const BsConditionSets& sets,
                        const SuperclassFunction& f) {
    BsResult res;
    for (const auto& w : sets.order_p) {
        int64_t a = eval_at(tab, f, w.sub), b = eval_at(tab, f, w.top);
        if (((a - b) % 2 + 2) % 2 != 0) {
            res.ok = false;
            res.witness = BsWitness{"parity", w,
                                    "f(S)=" + std::to_string(a) + " f(T)=" + std::to_string(b) +
                                        " at S=" + describe(tab, w.sub) + " T=" + describe(tab, w.top)};
            return res;
        }
    }
    for (const auto& w : sets.cyclic4) {
        int64_t a = eval_at(tab, f, w.sub), b = eval_at(tab, f, w.mid);
        if (((a - b) % 2 + 2) % 2 != 0) {
            res.ok = false;
            res.witness = BsWitness{"cyclic4", w,
                                    "f(H)=" + std::to_string(a) + " f(K)=" + std::to_string(b)};
            return res;
        }
    }
    for (const auto& w : sets.quaternion8) {
        int64_t a = eval_at(tab, f, w.sub), b = eval_at(tab, f, w.mid);
        if (((a - b) % 4 + 4) % 4 != 0) {
            res.ok = false;
            res.witness = BsWitness{"quaternion8", w,
                                    "f(H)=" + std::to_string(a) + " f(K)=" + std::to_string(b)};
            return res;
        }
    }
    for (const auto& w : sets.rank2) {
        int64_t lhs = eval_at(tab, f, w.sub) - eval_at(tab, f, w.top);
        int64_t rhs = 0;
        for (const auto& X : w.intermediates) rhs += eval_at(tab, f, X) - eval_at(tab, f, w.top);
        if (lhs != rhs) {
            res.ok = false;
            res.witness = BsWitness{"rank2", w,
                                    "f(S)-f(T)=" + std::to_string(lhs) +
                                        " but sum over intermediates is " + std::to_string(rhs)};
            return res;
        }
    }
    return res;
}

BsResult is_borel_smith(const SubgroupClassTable& tab, const SuperclassFunction& f) {
    return is_borel_smith(tab, bs_condition_sets(tab), f);
}

BasisReport verify_basis(const SubgroupClassTable& tab, const std::vector<SuperclassFunction>& basis) {
    BasisReport rep;
    auto sets = bs_condition_sets(tab);
    for (int i = 0; i < (int)basis.size(); ++i) {
        auto r = is_borel_smith(tab, sets, basis[i]);
        if (!r.ok) {
            rep.all_borel_smith = false;
            rep.failing.push_back(i);
        }
    }

    int nf = tab.num_classes();

    // collect constraints, dedup by class signature
    struct Cong { int a, b; int64_t m; };
    std::vector<Cong> congs;
    std::set<std::tuple<int, int, int64_t>> cseen;
    auto add_cong = [&](const Subgroup& A, const Subgroup& B, int64_t m) {
        int ca = tab.class_of(A), cb = tab.class_of(B);
        if (ca == cb) return;
        if (ca > cb) std::swap(ca, cb);
        if (cseen.insert({ca, cb, m}).second) congs.push_back({ca, cb, m});
    };
    for (const auto& w : sets.order_p) add_cong(w.sub, w.top, 2);
    for (const auto& w : sets.cyclic4) add_cong(w.sub, w.mid, 2);
    for (const auto& w : sets.quaternion8) add_cong(w.sub, w.mid, 4);

    std::vector<std::vector<int64_t>> eqs;
    std::set<std::vector<int64_t>> eseen;
    for (const auto& w : sets.rank2) {
        std::vector<int64_t> row(nf, 0);
        int p = tab.G->prime;
        row[tab.class_of(w.sub)] += 1;
        row[tab.class_of(w.top)] += p;
        for (const auto& X : w.intermediates) row[tab.class_of(X)] -= 1;
        bool zero = true;
        for (auto v : row) zero = zero && v == 0;
        if (!zero && eseen.insert(row).second) eqs.push_back(row);
    }

    int naux = (int)congs.size();
    IntMat A((int)eqs.size() + naux, nf + naux);
    int rr = 0;
    for (const auto& e : eqs) {
        for (int j = 0; j < nf; ++j) A.at(rr, j) = e[j];
        ++rr;
    }
    for (int i = 0; i < naux; ++i) {
        A.at(rr, congs[i].a) = 1;
        A.at(rr, congs[i].b) = -1;
        A.at(rr, nf + i) = -congs[i].m;
        ++rr;
    }

    IntMat K = int_kernel(A);
    // project onto the f-coordinates
    IntMat P(nf, K.cols);
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < K.cols; ++j) P.at(i, j) = K.at(i, j);
    rep.solution_hnf = hnf(P);

    IntMat B(nf, (int)basis.size());
    for (int j = 0; j < (int)basis.size(); ++j)
        for (int i = 0; i < nf; ++i) B.at(i, j) = basis[j][i];
    rep.basis_hnf = hnf(B);

    rep.constraint_rank = rep.solution_hnf.cols;
    rep.independent = (rep.basis_hnf.cols == (int)basis.size());
    rep.lattice_equal = (rep.basis_hnf == rep.solution_hnf);
    return rep;
}

std::vector<std::pair<int, int>> indistinguishable_pairs(const SubgroupClassTable& tab,
                                                         const std::vector<SuperclassFunction>& basis) {
    std::vector<std::pair<int, int>> out;
    int n = tab.num_classes();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool same = true;
            for (const auto& f : basis)
                if (f[i] != f[j]) { same = false; break; }
            if (same) out.emplace_back(i, j);
        }
    return out;
}

} // namespace ttk
