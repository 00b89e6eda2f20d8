#include "ttk/orbit.hpp"

#include "ttk/error.hpp"
#include "ttk/resolution.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace ttk {

// =====================================================================
// CosetVec / Morphism arithmetic
// =====================================================================

namespace {

void cv_add(CosetVec& v, Elt rep, int c, int p) {
    c %= p;
    if (c < 0) c += p;
    if (!c) return;
    auto it = v.find(rep);
    if (it == v.end()) {
        v[rep] = c;
    } else {
        it->second = (it->second + c) % p;
        if (!it->second) v.erase(it);
    }
}

int cv_aug(const CosetVec& v, int p) {
    int s = 0;
    for (auto& [g, c] : v) s = (s + c) % p;
    return s;
}

// compose entry f: X->Y (cosets of Y-stab) with g: Y->Z; target stab T
CosetVec cv_compose(const Group& G, const CosetVec& g, const CosetVec& f, const Subgroup& T, int p) {
    CosetVec out;
    for (auto& [u, c] : f)
        for (auto& [v, d] : g) cv_add(out, coset_canon(G, G.mult(u, v), T), c * d, p);
    return out;
}

CosetVec cv_scale(const CosetVec& v, int c, int p) {
    CosetVec out;
    for (auto& [g, x] : v) cv_add(out, g, x * c, p);
    return out;
}

} // namespace

bool Morphism::zero() const {
    for (auto& [k, v] : e)
        if (!v.empty()) return false;
    return true;
}

const CosetVec* Morphism::entry(int s, int t) const {
    auto it = e.find({s, t});
    return (it == e.end() || it->second.empty()) ? nullptr : &it->second;
}

Morphism morphism_add(const Morphism& a, const Morphism& b, int p) {
    Morphism out = a;
    for (auto& [k, v] : b.e)
        for (auto& [g, c] : v) cv_add(out.e[k], g, c, p);
    for (auto it = out.e.begin(); it != out.e.end();)
        it = it->second.empty() ? out.e.erase(it) : std::next(it);
    return out;
}

Morphism morphism_sub(const Morphism& a, const Morphism& b, int p) {
    return morphism_add(a, morphism_scale(b, p - 1, p), p);
}

Morphism morphism_scale(const Morphism& a, int c, int p) {
    Morphism out;
    for (auto& [k, v] : a.e) {
        CosetVec w = cv_scale(v, c, p);
        if (!w.empty()) out.e[k] = std::move(w);
    }
    return out;
}

Morphism morphism_compose(const Group& G, const Morphism& g, const Morphism& f,
                          const OrbitModule& dst, int p) {
    Morphism out;
    for (auto& [kf, vf] : f.e) {
        auto [s, m] = kf;
        for (auto& [kg, vg] : g.e) {
            auto [m2, t] = kg;
            if (m2 != m) continue;
            CosetVec comp = cv_compose(G, vg, vf, dst.summands[t], p);
            for (auto& [x, c] : comp) cv_add(out.e[{s, t}], x, c, p);
        }
    }
    for (auto it = out.e.begin(); it != out.e.end();)
        it = it->second.empty() ? out.e.erase(it) : std::next(it);
    return out;
}

// =====================================================================
// OrbitComplex basics
// =====================================================================

namespace {
const OrbitModule kEmptyModule{};
const Morphism kEmptyMorphism{};
} // namespace

const OrbitModule& OrbitComplex::mod(int i) const {
    if (i < lo || i > hi) return kEmptyModule;
    return mods[i - lo];
}

const Morphism& OrbitComplex::diff(int i) const {
    if (i <= lo || i > hi) return kEmptyMorphism;
    return diffs[i - lo];
}

int OrbitComplex::total_summands() const {
    int s = 0;
    for (auto& m : mods) s += m.size();
    return s;
}

int OrbitComplex::total_dim() const {
    int s = 0;
    for (auto& m : mods)
        for (auto& K : m.summands) s += G->order / K.order();
    return s;
}

namespace {

// drop empty degrees at both ends of the support interval
void trim(OrbitComplex& C) {
    while (C.lo <= C.hi && C.mods.front().size() == 0) {
        C.mods.erase(C.mods.begin());
        C.diffs.erase(C.diffs.begin());
        ++C.lo;
        if (C.lo <= C.hi) C.diffs.front() = Morphism{}; // map out of the new bottom
    }
    while (C.hi >= C.lo && C.mods.back().size() == 0) {
        C.mods.pop_back();
        C.diffs.pop_back();
        --C.hi;
    }
    if (C.hi < C.lo) {
        C.mods.clear();
        C.diffs.clear();
        C.lo = 0;
        C.hi = -1;
    }
}

bool coset_fixed_by(const Group& G, Elt g, const Subgroup& A, const Subgroup& B) {
    // A <= g B g^-1, i.e. g^-1 a g in B for all a
    Elt gi = G.inv(g);
    for (Elt a : A.elems)
        if (!B.contains(G.mult(G.mult(gi, a), g))) return false;
    return true;
}

} // namespace

void validate(const OrbitComplex& C) {
    const Group& G = *C.G;
    const int p = G.prime;
    if (C.zero()) return;
    if ((int)C.mods.size() != C.hi - C.lo + 1 || C.mods.size() != C.diffs.size())
        throw math_guard("NotAComplex", "support interval and storage disagree");
    for (int i = C.lo; i <= C.hi; ++i) {
        const Morphism& d = C.diff(i);
        const OrbitModule& src = C.mod(i);
        const OrbitModule& dst = C.mod(i - 1);
        for (auto& [k, v] : d.e) {
            auto [s, t] = k;
            if (s < 0 || s >= src.size() || t < 0 || t >= dst.size())
                throw math_guard("NotAComplex", "entry indices out of range");
            const Subgroup& A = src.summands[s];
            const Subgroup& B = dst.summands[t];
            for (auto& [g, c] : v) {
                if (c <= 0 || c >= p) throw math_guard("NotAComplex", "coefficient not reduced");
                if (coset_canon(G, g, B) != g)
                    throw math_guard("NotAComplex", "coset representative not canonical");
                if (C.orbit_level && !coset_fixed_by(G, g, A, B)) {
                    std::ostringstream os;
                    os << "entry k[G/A] -> k[G/B] at degree " << i << " supported on a coset gB with A not <= gBg^-1 (|A|="
                       << A.order() << ", |B|=" << B.order() << ")";
                    throw math_guard("StabilizerViolation", os.str());
                }
            }
            if (!C.orbit_level) {
                // equivariance: the vector must be A-stable
                for (Elt a : A.elems) {
                    CosetVec moved;
                    for (auto& [g, c] : v) cv_add(moved, coset_canon(G, G.mult(a, g), B), c, p);
                    if (moved != v) throw math_guard("NotAComplex", "entry not equivariant");
                }
            }
        }
    }
    for (int i = C.lo + 2; i <= C.hi; ++i) {
        Morphism sq = morphism_compose(G, C.diff(i - 1), C.diff(i), C.mod(i - 2), p);
        if (!sq.zero()) {
            std::ostringstream os;
            os << "d_" << (i - 1) << " o d_" << i << " != 0";
            throw math_guard("NotAComplex", os.str());
        }
    }
}

// =====================================================================
// constructions
// =====================================================================

OrbitComplex unit_complex(const GroupPtr& G, int degree) {
    OrbitComplex C;
    C.G = G;
    C.lo = C.hi = degree;
    std::vector<Elt> all(G->order);
    for (int i = 0; i < G->order; ++i) all[i] = i;
    C.mods.push_back(OrbitModule{{Subgroup{all}}});
    C.diffs.push_back(Morphism{});
    return C;
}

OrbitComplex free_summand_complex(const GroupPtr& G, const Subgroup& K, int degree) {
    OrbitComplex C;
    C.G = G;
    C.lo = C.hi = degree;
    C.mods.push_back(OrbitModule{{K}});
    C.diffs.push_back(Morphism{});
    return C;
}

OrbitComplex cone_of_identity(const GroupPtr& G, const Subgroup& K, int top_degree) {
    OrbitComplex C;
    C.G = G;
    C.lo = top_degree - 1;
    C.hi = top_degree;
    C.mods.push_back(OrbitModule{{K}});
    C.mods.push_back(OrbitModule{{K}});
    C.diffs.push_back(Morphism{});
    Morphism d;
    d.e[{0, 0}] = CosetVec{{coset_canon(*G, 0, K), 1}};
    C.diffs.push_back(std::move(d));
    return C;
}

OrbitComplex direct_sum(const OrbitComplex& A, const OrbitComplex& B) {
    if (A.zero()) return B;
    if (B.zero()) return A;
    if (A.G != B.G) throw invalid_input("ShapeMismatch", "direct sum over different groups");
    OrbitComplex C;
    C.G = A.G;
    C.lo = std::min(A.lo, B.lo);
    C.hi = std::max(A.hi, B.hi);
    C.orbit_level = A.orbit_level && B.orbit_level;
    for (int i = C.lo; i <= C.hi; ++i) {
        OrbitModule m = A.mod(i);
        int off = m.size();
        for (auto& s : B.mod(i).summands) m.summands.push_back(s);
        C.mods.push_back(std::move(m));
        Morphism d = A.diff(i);
        int off_t = A.mod(i - 1).size();
        for (auto& [k, v] : B.diff(i).e) d.e[{k.first + off, k.second + off_t}] = v;
        C.diffs.push_back(std::move(d));
    }
    return C;
}

OrbitComplex shift(const OrbitComplex& C, int n) {
    OrbitComplex out = C;
    out.lo += n;
    out.hi += n;
    if (n % 2 != 0) {
        for (auto& d : out.diffs) d = morphism_scale(d, C.G->prime - 1, C.G->prime);
    }
    return out;
}

OrbitComplex dual(const OrbitComplex& C) {
    const Group& G = *C.G;
    const int p = G.prime;
    OrbitComplex D;
    D.G = C.G;
    if (C.zero()) return D;
    D.lo = -C.hi;
    D.hi = -C.lo;
    D.orbit_level = false; // transposes are merely equivariant in general
    for (int i = D.lo; i <= D.hi; ++i) D.mods.push_back(C.mod(-i));
    D.diffs.assign(D.hi - D.lo + 1, Morphism{});
    // d^D_i : D_i = C_{-i} -> D_{i-1} = C_{-i+1} is the transpose of
    // d^C_{-i+1} : C_{-i+1} -> C_{-i}, with sign (-1)^i
    for (int i = D.lo + 1; i <= D.hi; ++i) {
        const Morphism& d = C.diff(-i + 1);
        const OrbitModule& src = C.mod(-i + 1); // becomes target of the transpose
        const OrbitModule& dst = C.mod(-i);     // becomes source
        Morphism t;
        for (auto& [k, v] : d.e) {
            auto [s, tt] = k; // s in C_{-i+1}, tt in C_{-i}
            const Subgroup& A = src.summands[s];
            const Subgroup& B = dst.summands[tt];
            // transpose of (1A -> sum c_g gB): coefficient of xA in image of 1B
            // is sum over g of c_g * #{reps of xA hit}; computed by expanding
            // the map on every source coset and reading the 1B coordinate
            CosetVec tv;
            for (Elt x : coset_reps(G, A)) {
                int coeff = 0;
                for (auto& [g, c] : v)
                    if (coset_canon(G, G.mult(x, g), B) == coset_canon(G, 0, B))
                        coeff = (coeff + c) % p;
                if (coeff) cv_add(tv, coset_canon(G, x, A), coeff, p);
            }
            int sign = (i % 2 != 0) ? p - 1 : 1;
            tv = cv_scale(tv, sign, p);
            if (!tv.empty()) t.e[{tt, s}] = std::move(tv);
        }
        D.diffs[i - D.lo] = std::move(t);
    }
    return D;
}

// =====================================================================
// dense view & homology
// =====================================================================

int DenseBasis::dim(int i) const {
    if (i < lo || i > hi) return 0;
    return (int)elems[i - lo].size();
}

int DenseBasis::idx(int i, int summand, Elt coset) const {
    auto it = index[i - lo].find({summand, coset});
    if (it == index[i - lo].end()) throw math_guard("Inconsistent", "dense index lookup failed");
    return it->second;
}

DenseBasis dense_basis(const OrbitComplex& C) {
    DenseBasis B;
    B.lo = C.lo;
    B.hi = C.hi;
    if (C.zero()) return B;
    const Group& G = *C.G;
    for (int i = C.lo; i <= C.hi; ++i) {
        std::vector<std::pair<int, Elt>> el;
        std::map<std::pair<int, Elt>, int> ix;
        const OrbitModule& m = C.mod(i);
        for (int s = 0; s < m.size(); ++s)
            for (Elt r : coset_reps(G, m.summands[s])) {
                ix[{s, r}] = (int)el.size();
                el.push_back({s, r});
            }
        B.elems.push_back(std::move(el));
        B.index.push_back(std::move(ix));
    }
    return B;
}

FpMat dense_morphism(const Group& G, const Morphism& m, const OrbitModule&,
                     const OrbitModule& dst, const DenseBasis& sb, int sdeg,
                     const DenseBasis& db, int ddeg, int p) {
    FpMat M(db.dim(ddeg), sb.dim(sdeg), p);
    if (M.rows == 0 || M.cols == 0) return M;
    for (int col = 0; col < sb.dim(sdeg); ++col) {
        auto [s, x] = sb.elems[sdeg - sb.lo][col];
        for (auto& [k, v] : m.e) {
            if (k.first != s) continue;
            int t = k.second;
            for (auto& [g, c] : v) {
                Elt y = coset_canon(G, G.mult(x, g), dst.summands[t]);
                int row = db.idx(ddeg, t, y);
                M.at(row, col) = (M.at(row, col) + c) % p;
            }
        }
    }
    return M;
}

FpMat dense_diff(const OrbitComplex& C, const DenseBasis& B, int i) {
    const Group& G = *C.G;
    if (i <= C.lo || i > C.hi) return FpMat(B.dim(i - 1), B.dim(i), G.prime);
    return dense_morphism(G, C.diff(i), C.mod(i), C.mod(i - 1), B, i, B, i - 1, G.prime);
}

std::map<int, int> homology_dims(const OrbitComplex& C) {
    std::map<int, int> H;
    if (C.zero()) return H;
    DenseBasis B = dense_basis(C);
    std::vector<int> rk(C.hi - C.lo + 2, 0);
    for (int i = C.lo + 1; i <= C.hi; ++i) rk[i - C.lo] = rank(dense_diff(C, B, i));
    for (int i = C.lo; i <= C.hi; ++i) {
        int dim = B.dim(i);
        int r_out = (i > C.lo) ? rk[i - C.lo] : 0;
        int r_in = (i < C.hi) ? rk[i + 1 - C.lo] : 0;
        int h = dim - r_out - r_in;
        if (h) H[i] = h;
    }
    return H;
}

int total_homology_dim(const OrbitComplex& C) {
    int s = 0;
    for (auto& [d, h] : homology_dims(C)) s += h;
    return s;
}

// =====================================================================
// tensor product
// =====================================================================

namespace {

// canonical representative (minimal element) of the double coset A g B
Elt double_coset_canon(const Group& G, const Subgroup& A, Elt g, const Subgroup& B) {
    Elt best = G.order;
    for (Elt a : A.elems) {
        Elt ag = G.mult(a, g);
        for (Elt b : B.elems) best = std::min(best, G.mult(ag, b));
    }
    return best;
}

} // namespace

TensorResult tensor_labeled(const OrbitComplex& A, const OrbitComplex& B) {
    if (A.G != B.G) throw invalid_input("ShapeMismatch", "tensor over different groups");
    const Group& G = *A.G;
    const int p = G.prime;
    TensorResult T;
    T.cx.G = A.G;
    T.cx.orbit_level = A.orbit_level && B.orbit_level;
    if (A.zero() || B.zero()) {
        T.cx.lo = 0;
        T.cx.hi = -1;
        return T;
    }
    T.cx.lo = A.lo + B.lo;
    T.cx.hi = A.hi + B.hi;

    // summand lists with double-coset decompositions
    std::map<std::tuple<int, int, int, Elt>, int> tindex; // (deg_a, a, b, rep) -> summand idx per degree map below
    std::vector<std::map<std::tuple<int, int, int, Elt>, int>> index_per_degree(T.cx.hi - T.cx.lo + 1);
    for (int n = T.cx.lo; n <= T.cx.hi; ++n) {
        OrbitModule m;
        std::vector<TensorSummand> lab;
        for (int i = std::max(A.lo, n - B.hi); i <= std::min(A.hi, n - B.lo); ++i) {
            const OrbitModule& ma = A.mod(i);
            const OrbitModule& mb = B.mod(n - i);
            for (int a = 0; a < ma.size(); ++a)
                for (int b = 0; b < mb.size(); ++b) {
                    const Subgroup& SA = ma.summands[a];
                    const Subgroup& SB = mb.summands[b];
                    // enumerate double cosets SA g SB
                    std::vector<bool> seen(G.order, false);
                    for (Elt g = 0; g < G.order; ++g) {
                        if (seen[g]) continue;
                        for (Elt x : SA.elems) {
                            Elt xg = G.mult(x, g);
                            for (Elt y : SB.elems) seen[G.mult(xg, y)] = true;
                        }
                        // stabilizer SA cap g SB g^-1
                        std::vector<Elt> stab;
                        for (Elt x : SA.elems) {
                            Elt t = G.mult(G.mult(G.inv(g), x), g);
                            if (SB.contains(t)) stab.push_back(x);
                        }
                        std::sort(stab.begin(), stab.end());
                        index_per_degree[n - T.cx.lo][{i, a, b, g}] = m.size();
                        m.summands.push_back(Subgroup{stab});
                        lab.push_back(TensorSummand{i, a, b, g});
                    }
                }
        }
        T.cx.mods.push_back(std::move(m));
        T.labels.push_back(std::move(lab));
    }
    tindex.clear();

    // helper: locate the orbit of a pure pair (uA_a at deg i, vB_b at deg j)
    // and the element w with (w rep-pair) = (uA, vB); returns (summand, w)
    auto locate = [&](int n, int i, int a, int b, const Subgroup& SA, const Subgroup& SB, Elt u,
                      Elt v) -> std::pair<int, Elt> {
        Elt key = double_coset_canon(G, SA, G.mult(G.inv(u), v), SB);
        auto it = index_per_degree[n - T.cx.lo].find({i, a, b, key});
        if (it == index_per_degree[n - T.cx.lo].end())
            throw math_guard("Inconsistent", "tensor summand lookup failed");
        // find w in uSA with w*key*SB = v*SB
        Elt vc = coset_canon(G, v, SB);
        for (Elt x : SA.elems) {
            Elt w = G.mult(u, x);
            if (coset_canon(G, G.mult(w, key), SB) == vc) return {it->second, w};
        }
        throw math_guard("Inconsistent", "tensor orbit transport failed");
    };

    // differentials
    T.cx.diffs.assign(T.cx.hi - T.cx.lo + 1, Morphism{});
    for (int n = T.cx.lo + 1; n <= T.cx.hi; ++n) {
        Morphism d;
        const auto& labs = T.labels[n - T.cx.lo];
        for (int src = 0; src < (int)labs.size(); ++src) {
            const TensorSummand& L = labs[src];
            int i = L.deg_a, j = n - i;
            const Subgroup& SA = A.mod(i).summands[L.a];
            const Subgroup& SB = B.mod(j).summands[L.b];
            // d_A part: (1A (x) gB) -> sum c_u (uA' (x) gB)
            for (auto& [k, v] : A.diff(i).e) {
                if (k.first != L.a) continue;
                int a2 = k.second;
                const Subgroup& SA2 = A.mod(i - 1).summands[a2];
                for (auto& [u, c] : v) {
                    auto [tgt, w] = locate(n - 1, i - 1, a2, L.b, SA2, SB, u, L.rep);
                    const Subgroup& S2 = T.cx.mod(n - 1).summands[tgt];
                    cv_add(d.e[{src, tgt}], coset_canon(G, w, S2), c, p);
                }
            }
            // d_B part with Koszul sign (-1)^i: (1A (x) gB) -> (1A (x) g vB')
            int sign = (i % 2 != 0) ? p - 1 : 1;
            for (auto& [k, v] : B.diff(j).e) {
                if (k.first != L.b) continue;
                int b2 = k.second;
                const Subgroup& SB2 = B.mod(j - 1).summands[b2];
                for (auto& [u, c] : v) {
                    auto [tgt, w] = locate(n - 1, i, L.a, b2, SA, SB2, 0, G.mult(L.rep, u));
                    const Subgroup& S2 = T.cx.mod(n - 1).summands[tgt];
                    cv_add(d.e[{src, tgt}], coset_canon(G, w, S2), sign * c, p);
                }
            }
        }
        for (auto it = d.e.begin(); it != d.e.end();)
            it = it->second.empty() ? d.e.erase(it) : std::next(it);
        T.cx.diffs[n - T.cx.lo] = std::move(d);
    }
    return T;
}

OrbitComplex tensor(const OrbitComplex& A, const OrbitComplex& B) {
    return tensor_labeled(A, B).cx;
}

TensorPairing tensor_pairing(const TensorResult& T, const OrbitComplex& A, const OrbitComplex& B,
                             const DenseBasis& tb, const DenseBasis& ab, const DenseBasis& bb) {
    const Group& G = *T.cx.G;
    TensorPairing P;
    for (int n = T.cx.lo; n <= T.cx.hi; ++n) {
        std::vector<std::tuple<int, int, int>> row(tb.dim(n));
        for (int idx = 0; idx < tb.dim(n); ++idx) {
            auto [s, w] = tb.elems[n - tb.lo][idx];
            const TensorSummand& L = T.labels[n - T.cx.lo][s];
            int i = L.deg_a, j = n - i;
            const Subgroup& SA = A.mod(i).summands[L.a];
            const Subgroup& SB = B.mod(j).summands[L.b];
            int ia = ab.idx(i, L.a, coset_canon(G, w, SA));
            int ib = bb.idx(j, L.b, coset_canon(G, G.mult(w, L.rep), SB));
            row[idx] = {i, ia, ib};
        }
        P.pairs.push_back(std::move(row));
    }
    return P;
}

// =====================================================================
// evaluation at a subgroup
// =====================================================================

Evaluated evaluate(const OrbitComplex& C, const WeylData& wd, const Subgroup& H) {
    const Group& G = *C.G;
    const Group& W = *wd.W;
    const int p = G.prime;

    Evaluated ev;
    ev.wd = wd;
    ev.cx.G = wd.W;
    ev.cx.orbit_level = C.orbit_level;
    ev.src_basis = dense_basis(C);
    if (C.zero()) {
        ev.cx.lo = 0;
        ev.cx.hi = -1;
        return ev;
    }
    ev.cx.lo = C.lo;
    ev.cx.hi = C.hi;

    Subgroup N = normalizer(G, H);

    // per degree, per source dense index: target (summand, W-coset) or -1
    std::vector<std::vector<std::pair<int, Elt>>> tmap(C.hi - C.lo + 1);
    for (int i = C.lo; i <= C.hi; ++i) {
        OrbitModule m;
        auto& tm = tmap[i - C.lo];
        tm.assign(ev.src_basis.dim(i), {-1, 0});
        const OrbitModule& srcm = C.mod(i);
        for (int s = 0; s < srcm.size(); ++s) {
            const Subgroup& K = srcm.summands[s];
            // H-fixed cosets of K, ascending
            std::vector<Elt> fixed;
            for (Elt r : coset_reps(G, K))
                if (coset_fixed_by(G, r, H, K)) fixed.push_back(r);
            std::set<Elt> unseen(fixed.begin(), fixed.end());
            while (!unseen.empty()) {
                Elt rep = *unseen.begin();
                // W-orbit of rep; stabilizer in W
                std::vector<Elt> stabW;
                std::map<Elt, Elt> orbit; // G-coset canon -> W element moving rep there
                for (Elt nn : N.elems) {
                    Elt img = coset_canon(G, G.mult(nn, rep), K);
                    Elt wel = wd.proj[nn];
                    auto it = orbit.find(img);
                    if (it == orbit.end()) orbit[img] = wel;
                    if (img == rep) stabW.push_back(wel);
                }
                std::sort(stabW.begin(), stabW.end());
                stabW.erase(std::unique(stabW.begin(), stabW.end()), stabW.end());
                Subgroup SW{stabW};
                int new_idx = m.size();
                m.summands.push_back(SW);
                for (auto& [img, wel] : orbit) {
                    unseen.erase(img);
                    tm[ev.src_basis.idx(i, s, img)] = {new_idx, coset_canon(W, wel, SW)};
                }
            }
        }
        ev.cx.mods.push_back(std::move(m));
    }

    // differentials: push each source orbit representative through d
    ev.cx.diffs.assign(C.hi - C.lo + 1, Morphism{});
    for (int i = C.lo + 1; i <= C.hi; ++i) {
        Morphism d;
        const OrbitModule& dstm = C.mod(i - 1);
        // for each W-summand find its source representative (summand s, coset r)
        // recorded implicitly: scan source dense elems whose tm hits (o, identity coset)
        const auto& tm_i = tmap[i - C.lo];
        const auto& tm_prev = tmap[i - 1 - C.lo];
        std::vector<std::pair<int, Elt>> orbit_rep(ev.cx.mod(i).size(), {-1, 0});
        for (int idx = 0; idx < ev.src_basis.dim(i); ++idx) {
            auto [o, wc] = tm_i[idx];
            if (o < 0) continue;
            const Subgroup& SW = ev.cx.mod(i).summands[o];
            if (wc == coset_canon(W, 0, SW) && orbit_rep[o].first < 0)
                orbit_rep[o] = ev.src_basis.elems[i - ev.src_basis.lo][idx];
        }
        for (int o = 0; o < ev.cx.mod(i).size(); ++o) {
            auto [s, r] = orbit_rep[o];
            if (s < 0) throw math_guard("Inconsistent", "orbit representative missing");
            for (auto& [k, v] : C.diff(i).e) {
                if (k.first != s) continue;
                int t = k.second;
                const Subgroup& B = dstm.summands[t];
                for (auto& [g, c] : v) {
                    Elt y = coset_canon(G, G.mult(r, g), B);
                    int yidx = ev.src_basis.idx(i - 1, t, y);
                    auto [o2, wc2] = tm_prev[yidx];
                    if (o2 < 0) continue; // Brauer quotient kills non-fixed cosets
                    cv_add(d.e[{o, o2}], wc2, c, p);
                }
            }
        }
        for (auto it = d.e.begin(); it != d.e.end();)
            it = it->second.empty() ? d.e.erase(it) : std::next(it);
        ev.cx.diffs[i - C.lo] = std::move(d);
    }
    trim(ev.cx);
    ev.dst_basis = dense_basis(ev.cx);
    ev.g2w.assign(C.hi - C.lo + 1, {});
    for (int i = C.lo; i <= C.hi; ++i) {
        auto& row = ev.g2w[i - C.lo];
        row.assign(ev.src_basis.dim(i), -1);
        for (int idx = 0; idx < ev.src_basis.dim(i); ++idx) {
            auto [o, wc] = tmap[i - C.lo][idx];
            if (o >= 0 && i >= ev.cx.lo && i <= ev.cx.hi) row[idx] = ev.dst_basis.idx(i, o, wc);
        }
    }
    return ev;
}

Evaluated evaluate(const OrbitComplex& C, const Subgroup& H) {
    return evaluate(C, weyl_group(C.G, H), H);
}

std::vector<int> evaluate_vector(const Evaluated& ev, int degree, const std::vector<int>& dense_src) {
    std::vector<int> out(ev.dst_basis.dim(degree), 0);
    if (degree < ev.src_basis.lo || degree > ev.src_basis.hi) return out;
    const auto& row = ev.g2w[degree - ev.src_basis.lo];
    int p = ev.cx.G->prime;
    for (int i = 0; i < (int)dense_src.size(); ++i)
        if (dense_src[i] && row[i] >= 0) out[row[i]] = (out[row[i]] + dense_src[i]) % p;
    return out;
}

// =====================================================================
// h-marks / endotriviality
// =====================================================================

namespace {

std::map<int, int> homology_at(const OrbitComplex& C, const WeylData& wd, const Subgroup& H) {
    return homology_dims(evaluate(C, wd, H).cx);
}

} // namespace

SuperclassFunction h_marks(const OrbitComplex& C, const SubgroupClassTable& tab) {
    int nc = tab.num_classes();
    SuperclassFunction h(nc, 0);
    std::vector<std::map<int, int>> hom(nc);
    std::exception_ptr eptr = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (int ci = 0; ci < nc; ++ci) {
        try {
            hom[ci] = homology_at(C, tab.weyl[ci], tab.classes[ci].rep);
        } catch (...) {
#pragma omp critical
            if (!eptr) eptr = std::current_exception();
        }
    }
    if (eptr) std::rethrow_exception(eptr);
    for (int ci = 0; ci < nc; ++ci) {
        const auto& H = hom[ci];
        int total = 0;
        for (auto& [d, x] : H) total += x;
        if (total != 1) {
            std::ostringstream os;
            os << "evaluation at class " << ci << " has total homology dimension " << total;
            throw math_guard("NotEndotrivial", os.str());
        }
        h[ci] = H.begin()->first;
        // constancy spot-check on a second conjugate
        const auto& cls = tab.classes[ci];
        if (cls.members.size() > 1) {
            std::mt19937 rng(927 + ci);
            const Subgroup& other =
                cls.members[1 + rng() % (cls.members.size() - 1)];
            auto H2 = homology_at(C, weyl_group(tab.G, other), other);
            if (H2 != H)
                throw math_guard("NotEndotrivial", "h-mark differs between conjugate subgroups");
        }
    }
    return h;
}

bool is_endotrivial(const OrbitComplex& C, const SubgroupClassTable& tab) {
    int nc = tab.num_classes();
    std::vector<int> totals(nc, 0);
    std::exception_ptr eptr = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (int ci = 0; ci < nc; ++ci) {
        try {
            int t = 0;
            for (auto& [d, x] : homology_at(C, tab.weyl[ci], tab.classes[ci].rep)) t += x;
            totals[ci] = t;
        } catch (...) {
#pragma omp critical
            if (!eptr) eptr = std::current_exception();
        }
    }
    if (eptr) std::rethrow_exception(eptr);
    for (int t : totals)
        if (t != 1) return false;
    return true;
}

// =====================================================================
// contractible summands and elimination
// =====================================================================

std::optional<ContractibleWitness> has_contractible_summand(const OrbitComplex& C) {
    if (C.zero()) return std::nullopt;
    // the fixed-vector criterion is a theorem about complexes of free
    // orbit-category modules only; a merely equivariant complex (a dual) can
    // have a fixed vector with nonzero boundary and no contractible summand
    // (coaugmentation k -> kG)
    if (!C.orbit_level)
        throw math_guard("StabilizerViolation",
                         "contractible-summand detection needs an orbit-level complex");
    const Group& G = *C.G;
    const int p = G.prime;
    DenseBasis B = dense_basis(C);
    for (int i = C.lo + 1; i <= C.hi; ++i) {
        const OrbitModule& src = C.mod(i);
        for (int s = 0; s < src.size(); ++s) {
            // dense image of the orbit sum of summand s
            std::vector<int> v(B.dim(i), 0);
            for (Elt r : coset_reps(G, src.summands[s])) v[B.idx(i, s, r)] = 1;
            FpMat D = dense_diff(C, B, i);
            auto img = fp_apply(D, v);
            for (int row = 0; row < (int)img.size(); ++row)
                if (img[row] % p) {
                    return ContractibleWitness{i, s, B.elems[i - 1 - B.lo][row].first};
                }
        }
    }
    return std::nullopt;
}

const Morphism* ComplexMap::at(int deg) const {
    auto it = comp.find(deg);
    return it == comp.end() ? nullptr : &it->second;
}

namespace {

ComplexMap identity_map(const OrbitComplex& C) {
    ComplexMap f;
    const Group& G = *C.G;
    for (int i = C.lo; i <= C.hi; ++i) {
        Morphism m;
        const OrbitModule& mod = C.mod(i);
        for (int s = 0; s < mod.size(); ++s)
            m.e[{s, s}] = CosetVec{{coset_canon(G, 0, mod.summands[s]), 1}};
        if (!m.e.empty()) f.comp[i] = std::move(m);
    }
    return f;
}

// g after f between complexes; modules of the destination supply stabilizers
ComplexMap compose_maps(const Group& G, const ComplexMap& g, const ComplexMap& f,
                        const OrbitComplex& dst, int p) {
    ComplexMap out;
    out.shift = f.shift + g.shift;
    for (auto& [i, fm] : f.comp) {
        const Morphism* gm = g.at(i + f.shift);
        if (!gm) continue;
        int tdeg = i + f.shift + g.shift;
        if (tdeg < dst.lo || tdeg > dst.hi) continue;
        Morphism c = morphism_compose(G, *gm, fm, dst.mod(tdeg), p);
        if (!c.zero()) out.comp[i] = std::move(c);
    }
    return out;
}

ComplexMap add_maps(const ComplexMap& a, const ComplexMap& b, int p) {
    if (a.shift != b.shift) throw invalid_input("ShapeMismatch", "adding maps of different shift");
    ComplexMap out = a;
    for (auto& [i, m] : b.comp) {
        auto it = out.comp.find(i);
        if (it == out.comp.end())
            out.comp[i] = m;
        else {
            it->second = morphism_add(it->second, m, p);
            if (it->second.zero()) out.comp.erase(it);
        }
    }
    return out;
}

// invert an entry phi: k[G/A] -> k[G/B] with |A| = |B| and nonzero
// augmentation, inside the local coset algebra of the Weyl group of A
CosetVec invert_pivot(const Group& G, const CosetVec& phi, const Subgroup& A, const Subgroup& B,
                      int p) {
    // anchor on a supported coset g0 B with g0^{-1} A g0 = B; one exists
    // whenever the augmentation is nonzero, since non-fixed A-orbits of
    // cosets contribute p-divisible coefficient sums (for orbit-level
    // entries every supported coset qualifies)
    Elt g0 = -1;
    for (auto& [g, c] : phi)
        if (coset_fixed_by(G, g, A, B)) { g0 = g; break; }
    if (g0 < 0) throw math_guard("PivotInversionFailure", "pivot has no fixed supported coset");
    // tau: 1B -> g0^{-1} A; u = tau o phi lives in End(k[G/A]), a local ring
    // with augmentation as the residue map
    CosetVec u;
    for (auto& [g, c] : phi) cv_add(u, coset_canon(G, G.mult(g, G.inv(g0)), A), c, p);
    int a0 = cv_aug(u, p);
    if (!a0) throw math_guard("PivotInversionFailure", "pivot has zero augmentation");
    int a0i = fp_inv(a0, p);
    Elt idA = coset_canon(G, 0, A);
    // nil = id - a0^{-1} u, nilpotent (augmentation-zero in a local ring)
    CosetVec nil;
    cv_add(nil, idA, 1, p);
    for (auto& [g, c] : u) cv_add(nil, g, -(a0i * c), p);
    CosetVec acc;
    cv_add(acc, idA, 1, p);
    CosetVec term = nil;
    int guard = 0;
    while (!term.empty()) {
        for (auto& [g, c] : term) cv_add(acc, g, c, p);
        CosetVec next;
        for (auto& [g, c] : term)
            for (auto& [h, d] : nil) cv_add(next, coset_canon(G, G.mult(g, h), A), c * d, p);
        term = std::move(next);
        if (++guard > 4 * G.order)
            throw math_guard("PivotInversionFailure", "radical power did not vanish");
    }
    CosetVec uinv = cv_scale(acc, a0i, p);
    // phi^{-1} = u^{-1} o tau: 1B -> sum e_n (g0^{-1} n) A
    CosetVec out;
    for (auto& [nrep, c] : uinv) cv_add(out, coset_canon(G, G.mult(G.inv(g0), nrep), A), c, p);
    return out;
}

struct Pivot {
    int degree; // source degree i, entry of d_i
    int src, dst;
};

std::optional<Pivot> find_pivot(const OrbitComplex& C) {
    const int p = C.G->prime;
    for (int i = C.lo + 1; i <= C.hi; ++i) {
        const OrbitModule& src = C.mod(i);
        const OrbitModule& dst = C.mod(i - 1);
        for (auto& [k, v] : C.diff(i).e) {
            auto [s, t] = k;
            if (src.summands[s].order() != dst.summands[t].order()) continue;
            if (cv_aug(v, p)) return Pivot{i, s, t};
        }
    }
    return std::nullopt;
}

} // namespace

bool is_chain_map(const OrbitComplex& src, const OrbitComplex& dst, const ComplexMap& f) {
    if (f.shift != 0) return false;
    const Group& G = *src.G;
    const int p = G.prime;
    for (int i = std::min(src.lo, dst.lo); i <= std::max(src.hi, dst.hi) + 1; ++i) {
        // d_dst o f_i vs f_{i-1} o d_src at degree i
        Morphism lhs, rhs;
        if (const Morphism* fi = f.at(i))
            if (i >= dst.lo && i <= dst.hi && i - 1 >= dst.lo)
                lhs = morphism_compose(G, dst.diff(i), *fi, dst.mod(i - 1), p);
        if (const Morphism* fi1 = f.at(i - 1))
            if (i >= src.lo && i <= src.hi && i - 1 >= dst.lo && i - 1 <= dst.hi)
                rhs = morphism_compose(G, *fi1, src.diff(i), dst.mod(i - 1), p);
        if (!morphism_sub(lhs, rhs, p).zero()) return false;
    }
    return true;
}

bool equivalence_exact(const OrbitComplex& C, const OrbitComplex& M, const EquivalenceData& eq) {
    const Group& G = *C.G;
    const int p = G.prime;
    if (!is_chain_map(C, M, eq.pi) || !is_chain_map(M, C, eq.sigma)) return false;
    // pi sigma = id_M
    ComplexMap ps = compose_maps(G, eq.pi, eq.sigma, M, p);
    ComplexMap idM = identity_map(M);
    for (int i = M.lo; i <= M.hi; ++i) {
        Morphism a = ps.at(i) ? *ps.at(i) : Morphism{};
        Morphism b = idM.at(i) ? *idM.at(i) : Morphism{};
        if (!morphism_sub(a, b, p).zero()) return false;
    }
    // id_C - sigma pi = d h + h d
    ComplexMap sp = compose_maps(G, eq.sigma, eq.pi, C, p);
    ComplexMap idC = identity_map(C);
    for (int i = C.lo; i <= C.hi; ++i) {
        Morphism want = idC.at(i) ? *idC.at(i) : Morphism{};
        if (sp.at(i)) want = morphism_sub(want, *sp.at(i), p);
        Morphism got;
        if (const Morphism* hi_ = eq.h.at(i))
            if (i + 1 >= C.lo && i + 1 <= C.hi)
                got = morphism_compose(G, C.diff(i + 1), *hi_, C.mod(i), p);
        if (const Morphism* hm = eq.h.at(i - 1))
            if (i >= C.lo && i <= C.hi && i - 1 >= C.lo)
                got = morphism_add(got, morphism_compose(G, *hm, C.diff(i), C.mod(i), p), p);
        if (!morphism_sub(want, got, p).zero()) return false;
    }
    return true;
}

Eliminated eliminate_contractibles(const OrbitComplex& C0) {
    if (!C0.orbit_level)
        throw math_guard("StabilizerViolation",
                         "Gaussian elimination needs an orbit-level complex");
    const Group& G = *C0.G;
    const int p = G.prime;
    OrbitComplex cur = C0;
    ComplexMap pi = identity_map(C0);
    ComplexMap sigma = identity_map(C0);
    ComplexMap h;
    h.shift = 1;

    while (auto pv = find_pivot(cur)) {
        int i = pv->degree;
        const OrbitModule& srcm = cur.mod(i);
        const OrbitModule& dstm = cur.mod(i - 1);
        const Subgroup& A = srcm.summands[pv->src];
        const Subgroup& B = dstm.summands[pv->dst];
        const CosetVec& phi = *cur.diff(i).entry(pv->src, pv->dst);
        CosetVec phi_inv = invert_pivot(G, phi, A, B, p);
        {
            // exact guard: phi_inv o phi = id_A and phi o phi_inv = id_B
            CosetVec c1 = cv_compose(G, phi_inv, phi, A, p);
            CosetVec c2 = cv_compose(G, phi, phi_inv, B, p);
            CosetVec idA{{coset_canon(G, 0, A), 1}}, idB{{coset_canon(G, 0, B), 1}};
            if (c1 != idA || c2 != idB)
                throw math_guard("PivotInversionFailure", "pivot inverse verification failed");
        }

        // index maps after removing pv->src at degree i and pv->dst at i-1
        auto reindex = [](int n, int removed) {
            std::vector<int> m(n);
            for (int x = 0, y = 0; x < n; ++x) m[x] = (x == removed) ? -1 : y++;
            return m;
        };
        std::vector<int> smap = reindex(srcm.size(), pv->src);
        std::vector<int> tmapv = reindex(dstm.size(), pv->dst);

        OrbitComplex next;
        next.G = cur.G;
        next.lo = cur.lo;
        next.hi = cur.hi;
        next.orbit_level = cur.orbit_level;
        for (int d = cur.lo; d <= cur.hi; ++d) {
            OrbitModule m = cur.mod(d);
            if (d == i) m.summands.erase(m.summands.begin() + pv->src);
            if (d == i - 1) m.summands.erase(m.summands.begin() + pv->dst);
            next.mods.push_back(std::move(m));
        }
        next.diffs.assign(cur.hi - cur.lo + 1, Morphism{});
        for (int d = cur.lo + 1; d <= cur.hi; ++d) {
            Morphism nd;
            for (auto& [k, v] : cur.diff(d).e) {
                auto [s, t] = k;
                int ns = (d == i) ? smap[s] : (d == i - 1 ? tmapv[s] : s);
                int nt = (d - 1 == i) ? smap[t] : (d - 1 == i - 1 ? tmapv[t] : t);
                if (ns < 0 || nt < 0) continue;
                nd.e[{ns, nt}] = v;
            }
            if (d == i) {
                // delta' = delta - gamma phi^{-1} beta
                const Morphism& di = cur.diff(i);
                for (auto& [kb, beta] : di.e) {
                    auto [x, tb] = kb;
                    if (tb != pv->dst || x == pv->src) continue;
                    for (auto& [kg, gamma] : di.e) {
                        auto [sa, y] = kg;
                        if (sa != pv->src || y == pv->dst) continue;
                        const Subgroup& TY = dstm.summands[y];
                        CosetVec mid = cv_compose(G, phi_inv, beta, A, p);
                        CosetVec corr = cv_compose(G, gamma, mid, TY, p);
                        for (auto& [g, c] : corr) cv_add(nd.e[{smap[x], tmapv[y]}], g, -c, p);
                    }
                }
            }
            for (auto it = nd.e.begin(); it != nd.e.end();)
                it = it->second.empty() ? nd.e.erase(it) : std::next(it);
            next.diffs[d - next.lo] = std::move(nd);
        }

        // step maps
        ComplexMap pstep, sstep, hstep;
        hstep.shift = 1;
        for (int d = cur.lo; d <= cur.hi; ++d) {
            Morphism pm, sm;
            const OrbitModule& cm = cur.mod(d);
            for (int s = 0; s < cm.size(); ++s) {
                int ns = (d == i) ? smap[s] : (d == i - 1 ? tmapv[s] : s);
                if (ns < 0) continue;
                CosetVec id{{coset_canon(G, 0, cm.summands[s]), 1}};
                pm.e[{s, ns}] = id;
                sm.e[{ns, s}] = id;
            }
            if (d == i - 1) {
                // pi correction: (b -> y) = -(gamma_y o phi_inv)
                for (auto& [kg, gamma] : cur.diff(i).e) {
                    auto [sa, y] = kg;
                    if (sa != pv->src || y == pv->dst) continue;
                    const Subgroup& TY = dstm.summands[y];
                    CosetVec corr = cv_compose(G, gamma, phi_inv, TY, p);
                    for (auto& [g, c] : corr) cv_add(pm.e[{pv->dst, tmapv[y]}], g, -c, p);
                }
            }
            if (d == i) {
                // sigma correction: (x -> a) = -(phi_inv o beta_x)
                for (auto& [kb, beta] : cur.diff(i).e) {
                    auto [x, tb] = kb;
                    if (tb != pv->dst || x == pv->src) continue;
                    CosetVec corr = cv_compose(G, phi_inv, beta, A, p);
                    for (auto& [g, c] : corr) cv_add(sm.e[{smap[x], pv->src}], g, -c, p);
                }
            }
            for (auto it = pm.e.begin(); it != pm.e.end();)
                it = it->second.empty() ? pm.e.erase(it) : std::next(it);
            for (auto it = sm.e.begin(); it != sm.e.end();)
                it = it->second.empty() ? sm.e.erase(it) : std::next(it);
            if (!pm.e.empty()) pstep.comp[d] = std::move(pm);
            if (!sm.e.empty()) sstep.comp[d] = std::move(sm);
        }
        {
            Morphism hm;
            hm.e[{pv->dst, pv->src}] = phi_inv;
            hstep.comp[i - 1] = std::move(hm);
        }

        // compose totals: h' = h + sigma_old o hstep o pi_old
        ComplexMap mid = compose_maps(G, hstep, pi, cur, p);
        ComplexMap corr = compose_maps(G, sigma, mid, C0, p);
        h = h.comp.empty() ? corr : add_maps(h, corr, p);
        h.shift = 1;
        pi = compose_maps(G, pstep, pi, next, p);
        sigma = compose_maps(G, sigma, sstep, C0, p);

        trim(next);
        cur = std::move(next);
    }

    Eliminated out{std::move(cur), EquivalenceData{std::move(pi), std::move(sigma), std::move(h)}};
    if (has_contractible_summand(out.min))
        throw math_guard("Inconsistent", "elimination left a contractible summand");
    if (!equivalence_exact(C0, out.min, out.eq))
        throw math_guard("Inconsistent", "homotopy equivalence identities failed after elimination");
    return out;
}

// =====================================================================
// builders
// =====================================================================

namespace {

Subgroup full_subgroup(const Group& G) {
    std::vector<Elt> all(G.order);
    for (int i = 0; i < G.order; ++i) all[i] = i;
    return Subgroup{all};
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

} // namespace

OrbitComplex builder_cyclic3(const GroupPtr& Gp, const Subgroup& N) {
    const Group& G = *Gp;
    const int p = G.prime;
    if (!is_normal(G, N)) throw math_guard("Inconsistent", "builder_cyclic3 needs a normal subgroup");
    WeylData q = quotient_group(Gp, N);
    int m = q.W->order;
    if (m < 2) throw math_guard("Inconsistent", "builder_cyclic3 needs a nontrivial quotient");
    // find sigma whose coset generates the cyclic quotient
    Elt sigma = -1;
    for (Elt w = 1; w < m; ++w)
        if (q.W->elt_order(w) == m) { sigma = q.section[w]; break; }
    if (sigma < 0) throw math_guard("Inconsistent", "quotient is not cyclic");

    OrbitComplex C;
    C.G = Gp;
    C.lo = 0;
    C.hi = 2;
    C.mods.push_back(OrbitModule{{full_subgroup(G)}});
    C.mods.push_back(OrbitModule{{N}});
    C.mods.push_back(OrbitModule{{N}});
    C.diffs.assign(3, Morphism{});
    {
        Morphism d1;
        d1.e[{0, 0}] = CosetVec{{0, 1}}; // augmentation onto k
        C.diffs[1] = std::move(d1);
    }
    {
        Morphism d2;
        CosetVec v;
        cv_add(v, coset_canon(G, sigma, N), 1, p);
        cv_add(v, coset_canon(G, 0, N), -1, p);
        d2.e[{0, 0}] = std::move(v);
        C.diffs[2] = std::move(d2);
    }
    validate(C);
    return C;
}

OrbitComplex builder_u(const GroupPtr& Gp, const Subgroup& N) {
    const Group& G = *Gp;
    const int p = G.prime;
    if (G.order != N.order() * p)
        throw math_guard("Inconsistent", "builder_u needs an index-p normal subgroup");
    if (p != 2) return builder_cyclic3(Gp, N);
    if (!is_normal(G, N)) throw math_guard("Inconsistent", "builder_u needs a normal subgroup");
    OrbitComplex C;
    C.G = Gp;
    C.lo = 0;
    C.hi = 1;
    C.mods.push_back(OrbitModule{{full_subgroup(G)}});
    C.mods.push_back(OrbitModule{{N}});
    C.diffs.assign(2, Morphism{});
    Morphism d1;
    d1.e[{0, 0}] = CosetVec{{0, 1}};
    C.diffs[1] = std::move(d1);
    validate(C);
    return C;
}

OrbitComplex builder_dihedral_pair(const GroupPtr& Gp, const Subgroup& H1, const Subgroup& H2) {
    const Group& G = *Gp;
    if (G.prime != 2) throw math_guard("Inconsistent", "dihedral builder needs p = 2");
    OrbitComplex C;
    C.G = Gp;
    C.lo = 0;
    C.hi = 2;
    C.mods.push_back(OrbitModule{{full_subgroup(G)}});
    C.mods.push_back(OrbitModule{{H1, H2}});
    C.mods.push_back(OrbitModule{{trivial_subgroup()}});
    C.diffs.assign(3, Morphism{});
    {
        Morphism d1;
        d1.e[{0, 0}] = CosetVec{{0, 1}};
        d1.e[{1, 0}] = CosetVec{{0, 1}};
        C.diffs[1] = std::move(d1);
    }
    {
        Morphism d2;
        d2.e[{0, 0}] = CosetVec{{coset_canon(G, 0, H1), 1}};
        d2.e[{0, 1}] = CosetVec{{coset_canon(G, 0, H2), 1}};
        C.diffs[2] = std::move(d2);
    }
    validate(C);
    return C;
}

OrbitComplex builder_dihedral(const GroupPtr& Gp) {
    const Group& G = *Gp;
    Subgroup Z = centralizer(G, full_subgroup(G));
    std::vector<Subgroup> reps;
    SubgroupClassTable tab = enumerate_subgroups(Gp);
    for (const auto& c : tab.classes)
        if (c.rep.order() == 2 && !Z.contains_set(c.rep)) reps.push_back(c.rep);
    if (reps.size() != 2)
        throw math_guard("Inconsistent",
                         "dihedral builder expects exactly two noncentral order-2 classes");
    return builder_dihedral_pair(Gp, reps[0], reps[1]);
}

OrbitComplex builder_periodic(const GroupPtr& Gp, int n) {
    const Group& G = *Gp;
    if (n < 1) throw invalid_input("ShapeMismatch", "builder_periodic needs n >= 1");
    MinResolution R = min_resolution(Gp, n - 1);
    if (R.length() < n - 1) throw math_guard("Inconsistent", "resolution terminated early");
    OrbitComplex C;
    C.G = Gp;
    C.lo = 0;
    C.hi = n;
    C.mods.push_back(OrbitModule{{full_subgroup(G)}});
    for (int j = 1; j <= n; ++j) {
        OrbitModule m;
        for (int r = 0; r < R.ranks[j - 1]; ++r) m.summands.push_back(trivial_subgroup());
        C.mods.push_back(std::move(m));
    }
    C.diffs.assign(n + 1, Morphism{});
    {
        Morphism d1; // augmentation kG -> k
        d1.e[{0, 0}] = CosetVec{{0, 1}};
        C.diffs[1] = std::move(d1);
    }
    for (int j = 2; j <= n; ++j) {
        Morphism d;
        int lvl = j - 1; // resolution differential P_{lvl} -> P_{lvl-1}
        for (int s = 0; s < R.ranks[lvl]; ++s) {
            const auto& img = R.diff[lvl][s];
            for (int t = 0; t < R.ranks[lvl - 1]; ++t) {
                CosetVec v;
                for (Elt w = 0; w < G.order; ++w)
                    if (img[t * G.order + w]) cv_add(v, w, img[t * G.order + w], G.prime);
                if (!v.empty()) d.e[{s, t}] = std::move(v);
            }
        }
        C.diffs[j] = std::move(d);
    }
    validate(C);
    return C;
}

OrbitComplex builder_inflate(const OrbitComplex& C, const GroupPtr& Gp, const WeylData& q) {
    const Group& G = *Gp;
    if (q.W != C.G) throw invalid_input("ShapeMismatch", "inflation quotient mismatch");
    auto preimage = [&](const Subgroup& Kbar) {
        std::vector<Elt> el;
        for (Elt g = 0; g < G.order; ++g)
            if (q.proj[g] >= 0 && Kbar.contains(q.proj[g])) el.push_back(g);
        return Subgroup{el};
    };
    OrbitComplex out;
    out.G = Gp;
    out.lo = C.lo;
    out.hi = C.hi;
    out.orbit_level = C.orbit_level;
    std::vector<std::vector<Subgroup>> lifted;
    for (int i = C.lo; i <= C.hi; ++i) {
        OrbitModule m;
        for (auto& K : C.mod(i).summands) m.summands.push_back(preimage(K));
        lifted.push_back(m.summands);
        out.mods.push_back(std::move(m));
    }
    out.diffs.assign(C.hi - C.lo + 1, Morphism{});
    for (int i = C.lo + 1; i <= C.hi; ++i) {
        Morphism d;
        for (auto& [k, v] : C.diff(i).e) {
            CosetVec nv;
            const Subgroup& B = lifted[i - 1 - C.lo][k.second];
            for (auto& [g, c] : v) cv_add(nv, coset_canon(G, q.section[g], B), c, G.prime);
            d.e[k] = std::move(nv);
        }
        out.diffs[i - C.lo] = std::move(d);
    }
    validate(out);
    return out;
}

// =====================================================================
// realize_basis
// =====================================================================

std::vector<int> RealizedBasis::nontrivial_realized() const {
    std::vector<int> out;
    for (int i = 0; i < (int)funcs.size(); ++i)
        if (i != trivial_index && complexes[i].has_value()) out.push_back(i);
    return out;
}

RealizedBasis realize_basis(const SubgroupClassTable& tab, const std::vector<SuperclassFunction>& basis,
                            int trivial_index, const std::vector<OrbitComplex>& user_complexes) {
    const GroupPtr& Gp = tab.G;
    const Group& G = *Gp;
    RealizedBasis out;
    out.funcs = basis;
    out.trivial_index = trivial_index;
    out.complexes.assign(basis.size(), std::nullopt);

    struct Candidate {
        OrbitComplex cx;
        bool user = false;
    };
    std::vector<Candidate> pool;
    pool.push_back({unit_complex(Gp, 1), false});

    // normal subgroups: the singleton conjugacy classes
    std::vector<Subgroup> normals;
    for (const auto& c : tab.classes)
        if (c.members.size() == 1 && c.rep.order() < G.order) normals.push_back(c.rep);

    for (const auto& N : normals) {
        WeylData q = quotient_group(Gp, N);
        const Group& Q = *q.W;
        // cyclic quotient: the rotation-type and (index 2) sign-type complexes
        bool cyclic = false;
        for (Elt w = 0; w < Q.order; ++w)
            if (Q.elt_order(w) == Q.order) { cyclic = true; break; }
        if (cyclic) {
            pool.push_back({builder_cyclic3(Gp, N), false});
            if (Q.order == 2) pool.push_back({builder_u(Gp, N), false});
        }
        // dihedral-type quotient: try all pairs of noncentral order-2 classes
        if (G.prime == 2 && !Q.is_abelian() && Q.order >= 8) {
            SubgroupClassTable qtab = enumerate_subgroups(q.W);
            Subgroup ZQ = centralizer(Q, full_subgroup(Q));
            std::vector<Subgroup> reps;
            for (const auto& c : qtab.classes)
                if (c.rep.order() == 2 && !ZQ.contains_set(c.rep)) reps.push_back(c.rep);
            for (size_t x = 0; x < reps.size(); ++x)
                for (size_t y = x + 1; y < reps.size(); ++y) {
                    try {
                        OrbitComplex cand = builder_dihedral_pair(q.W, reps[x], reps[y]);
                        pool.push_back({builder_inflate(cand, Gp, q), false});
                    } catch (const math_guard&) {
                    }
                }
        }
    }

    // periodic builders for basis functions of the shape n * [H <= N]
    for (const auto& f : basis) {
        int64_t n = f[0];
        if (n <= 0) continue;
        bool shape = true;
        for (auto v : f) shape = shape && (v == 0 || v == n);
        if (!shape || n == 1) continue;
        // support must be the classes below some normal subgroup
        for (const auto& N : normals) {
            bool match = true;
            int nidx = tab.class_of(N);
            for (int c = 0; c < tab.num_classes() && match; ++c)
                match = (f[c] == (tab.leq[c][nidx] ? n : 0));
            if (!match) continue;
            try {
                WeylData q = quotient_group(Gp, N);
                OrbitComplex cand = builder_periodic(q.W, (int)n);
                pool.push_back({builder_inflate(cand, Gp, q), false});
            } catch (const math_guard&) {
            } catch (const invalid_input&) {
            }
            break;
        }
    }
    // full-group N: faithful periodic complexes (cyclic/quaternion G itself)
    for (const auto& f : basis) {
        int64_t n = f[0];
        bool faithful_shape = n >= 2;
        for (int c = 1; c < tab.num_classes(); ++c) faithful_shape = faithful_shape && f[c] == 0;
        if (!faithful_shape) continue;
        try {
            pool.push_back({builder_periodic(Gp, (int)n), false});
        } catch (const math_guard&) {
        } catch (const invalid_input&) {
        }
    }

    for (const auto& U : user_complexes) {
        validate(U);
        pool.push_back({eliminate_contractibles(U).min, true});
    }

    for (auto& cand : pool) {
        SuperclassFunction h;
        try {
            validate(cand.cx);
            if (has_contractible_summand(cand.cx)) continue;
            h = h_marks(cand.cx, tab);
        } catch (const math_guard&) {
            if (cand.user) throw;
            continue;
        }
        bool matched = false;
        for (int i = 0; i < (int)basis.size(); ++i)
            if (basis[i] == h) {
                matched = true;
                if (!out.complexes[i]) out.complexes[i] = cand.cx;
                break;
            }
        if (!matched && cand.user)
            throw math_guard("HMarkMismatch", "user complex h-marks match no basis function");
    }
    for (int i = 0; i < (int)basis.size(); ++i)
        if (!out.complexes[i]) out.unrealized.push_back(i);
    return out;
}

// =====================================================================
// iota
// =====================================================================

std::vector<int> unit_map_dense(const OrbitComplex& C, const DenseBasis& B, const UnitMap& m) {
    std::vector<int> v(B.dim(m.degree), 0);
    const Group& G = *C.G;
    const OrbitModule& mod = C.mod(m.degree);
    for (int s = 0; s < mod.size(); ++s) {
        int c = (s < (int)m.coeffs.size()) ? m.coeffs[s] : 0;
        c = (c % G.prime + G.prime) % G.prime;
        if (!c) continue;
        for (Elt r : coset_reps(G, mod.summands[s])) v[B.idx(m.degree, s, r)] = c;
    }
    return v;
}

bool cone_exact_after_forget(const OrbitComplex& D, const DenseBasis& B, int degree,
                             const std::vector<int>& image_vec) {
    const int p = D.G->prime;
    // cone of f: k[degree] -> D; exact iff all homology vanishes
    int lo = std::min(D.lo, degree), hi = std::max(D.hi, degree + 1);
    auto dim = [&](int i) { return B.dim(i) + (i == degree + 1 ? 1 : 0); };
    auto matrix = [&](int i) {
        FpMat M(dim(i - 1), dim(i), p);
        FpMat Dd = dense_diff(D, B, i);
        for (int r = 0; r < Dd.rows; ++r)
            for (int c = 0; c < Dd.cols; ++c) M.at(r, c) = Dd.at(r, c);
        if (i == degree + 1)
            for (int r = 0; r < (int)image_vec.size(); ++r) M.at(r, B.dim(i)) = image_vec[r] % p;
        return M;
    };
    std::vector<int> rk(hi - lo + 2, 0);
    for (int i = lo + 1; i <= hi; ++i) rk[i - lo] = rank(matrix(i));
    for (int i = lo; i <= hi; ++i) {
        int r_out = (i > lo) ? rk[i - lo] : 0;
        int r_in = (i < hi) ? rk[i + 1 - lo] : 0;
        if (dim(i) - r_out - r_in != 0) return false;
    }
    return true;
}

UnitMap iota(const OrbitComplex& C, const SubgroupClassTable& tab, const SuperclassFunction& hmarks,
             int class_idx) {
    const Group& G = *C.G;
    const int p = G.prime;
    int n = (int)hmarks[class_idx];
    const OrbitModule& mod = C.mod(n);
    DenseBasis B = dense_basis(C);
    Evaluated ev = evaluate(C, tab.weyl[class_idx], tab.classes[class_idx].rep);
    DenseBasis& EB = ev.dst_basis;
    FpMat dn = dense_diff(C, B, n);
    FpMat dnext_ev = dense_diff(ev.cx, EB, n + 1);
    FpMat dn_ev = dense_diff(ev.cx, EB, n);

    std::vector<int> qualifying;
    for (int s = 0; s < mod.size(); ++s) {
        int cls = tab.class_of(mod.summands[s]);
        if (!tab.leq[class_idx][cls]) continue; // need H <=_G K
        UnitMap cand{n, std::vector<int>(mod.size(), 0)};
        cand.coeffs[s] = 1;
        std::vector<int> v = unit_map_dense(C, B, cand);
        // chain map: d_n(e) = 0
        bool cycle = true;
        for (int x : fp_apply(dn, v))
            if (x % p) { cycle = false; break; }
        if (!cycle) continue;
        // evaluated class generates H_n
        std::vector<int> w = evaluate_vector(ev, n, v);
        bool nonzero = false;
        for (int x : w) nonzero = nonzero || (x % p);
        if (!nonzero) continue;
        for (int x : fp_apply(dn_ev, w))
            if (x % p)
                throw math_guard("Inconsistent", "evaluated orbit sum is not a cycle");
        if (in_span(dnext_ev, w)) continue; // trivial class
        qualifying.push_back(s);
    }
    if (qualifying.empty())
        throw math_guard("NoQualifyingSummand",
                         "no degree-" + std::to_string(n) + " summand defines iota at class " +
                             std::to_string(class_idx));
    if (qualifying.size() > 1)
        throw math_guard("AmbiguousIota", "multiple summands qualify with distinct maps");
    UnitMap m{n, std::vector<int>(mod.size(), 0)};
    m.coeffs[qualifying[0]] = 1;
    return m;
}

bool iota_equal(const OrbitComplex& C, const SubgroupClassTable& tab, const SuperclassFunction& hmarks,
                int class_h, int class_k) {
    UnitMap a = iota(C, tab, hmarks, class_h);
    UnitMap b = iota(C, tab, hmarks, class_k);
    bool equal = (a.degree == b.degree) && (a.coeffs == b.coeffs);
    // cross-check: exists B with h(B) = h(H) = h(K), H,K <=_G B
    bool criterion = false;
    if (hmarks[class_h] == hmarks[class_k]) {
        for (int b2 = 0; b2 < tab.num_classes(); ++b2)
            if (hmarks[b2] == hmarks[class_h] && tab.leq[class_h][b2] && tab.leq[class_k][b2]) {
                criterion = true;
                break;
            }
    }
    if (equal != criterion)
        throw math_guard("Inconsistent", "iota equality disagrees with the subgroup criterion");
    return equal;
}

} // namespace ttk
