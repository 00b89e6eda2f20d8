#include "ttk/chartable.hpp"

#include "ttk/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ttk {

ElementClasses element_classes(const Group& G) {
    ElementClasses ec;
    ec.class_of.assign(G.order, -1);
    for (Elt a = 0; a < G.order; ++a) {
        if (ec.class_of[a] >= 0) continue;
        int idx = (int)ec.reps.size();
        std::set<Elt> orb;
        for (Elt g = 0; g < G.order; ++g) orb.insert(G.conj(g, a));
        ec.reps.push_back(*orb.begin());
        ec.members.emplace_back(orb.begin(), orb.end());
        for (Elt x : orb) ec.class_of[x] = idx;
    }
    return ec;
}

namespace {

bool is_prime64(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int64_t pw(int64_t b, int64_t e, int64_t m) {
    int64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// characteristic polynomial mod ell via the Faddeev-LeVerrier-free route:
// plain expansion by Hessenberg is overkill at these sizes; use Danilevsky?
// Simpler: evaluate det(A - x I) by Gaussian elimination for each candidate
// root. Candidate scan over all of F_ell is fine (ell < ~2000, dims < ~70).
int64_t det_mod(std::vector<int64_t> a, int n, int64_t ell) {
    int64_t det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[(size_t)r * n + c]) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = c; j < n; ++j) std::swap(a[(size_t)piv * n + j], a[(size_t)c * n + j]);
            det = ell - det;
        }
        int64_t d = a[(size_t)c * n + c];
        det = det * d % ell;
        int64_t inv = pw(d, ell - 2, ell);
        for (int r = c + 1; r < n; ++r) {
            int64_t f = a[(size_t)r * n + c];
            if (!f) continue;
            f = f * inv % ell;
            for (int j = c; j < n; ++j)
                a[(size_t)r * n + j] = (a[(size_t)r * n + j] + (ell - f) * a[(size_t)c * n + j]) % ell;
        }
    }
    return det % ell;
}

struct Fl {
    int64_t ell;
    int64_t add(int64_t a, int64_t b) const { return (a + b) % ell; }
    int64_t sub(int64_t a, int64_t b) const { return (a - b % ell + ell) % ell; }
    int64_t mul(int64_t a, int64_t b) const { return a % ell * (b % ell) % ell; }
    int64_t inv(int64_t a) const { return pw(a, ell - 2, ell); }
};

// basis columns of ker(A - lambda I) restricted to the subspace spanned by
// the columns of B (all mod ell); returns the kernel vectors in AMBIENT
// coordinates
std::vector<std::vector<int64_t>> eigen_in_subspace(const std::vector<int64_t>& action, int m,
                                                    const std::vector<std::vector<int64_t>>& basis,
                                                    int64_t lambda, const Fl& F) {
    // action is the m x m matrix of the operator on the subspace basis
    std::vector<int64_t> a = action;
    for (int i = 0; i < m; ++i) a[(size_t)i * m + i] = F.sub(a[(size_t)i * m + i], lambda);
    // kernel of a (m x m) over F_ell by RREF
    std::vector<int> piv;
    int r = 0;
    std::vector<int64_t> M = a;
    for (int c = 0; c < m && r < m; ++c) {
        int pr = -1;
        for (int i = r; i < m; ++i)
            if (M[(size_t)i * m + c]) { pr = i; break; }
        if (pr < 0) continue;
        for (int j = 0; j < m; ++j) std::swap(M[(size_t)pr * m + j], M[(size_t)r * m + j]);
        int64_t iv = F.inv(M[(size_t)r * m + c]);
        for (int j = 0; j < m; ++j) M[(size_t)r * m + j] = F.mul(M[(size_t)r * m + j], iv);
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            int64_t f = M[(size_t)i * m + c];
            if (!f) continue;
            for (int j = 0; j < m; ++j)
                M[(size_t)i * m + j] = F.sub(M[(size_t)i * m + j], F.mul(f, M[(size_t)r * m + j]));
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<bool> ispiv(m, false);
    for (int c : piv) ispiv[c] = true;
    std::vector<std::vector<int64_t>> out;
    int n_amb = (int)basis[0].size();
    for (int c = 0; c < m; ++c) {
        if (ispiv[c]) continue;
        std::vector<int64_t> coeff(m, 0);
        coeff[c] = 1;
        for (int i = 0; i < (int)piv.size(); ++i) coeff[piv[i]] = F.sub(0, M[(size_t)i * m + c]);
        std::vector<int64_t> amb(n_amb, 0);
        for (int i = 0; i < m; ++i)
            if (coeff[i])
                for (int j = 0; j < n_amb; ++j) amb[j] = F.add(amb[j], F.mul(coeff[i], basis[i][j]));
        out.push_back(std::move(amb));
    }
    return out;
}

} // namespace

int64_t splitting_prime(const Group& G) {
    int e = G.exponent();
    for (int64_t cand = e + 1;; cand += e) {
        if (cand > 2 * G.order && is_prime64(cand)) return cand;
        if (cand > 1000000)
            throw math_guard("NoSuitablePrime", "no prime ell == 1 mod exponent below bound");
    }
}

void validate_table(const Group& G, const CharacterTable& t) {
    const int n = G.order;
    const int r = t.classes.size();
    if (t.num_chars() != r)
        throw math_guard("Inconsistent", "character count differs from the class count");
    int64_t s = 0;
    for (int i = 0; i < r; ++i) {
        if (t.degrees[i] < 1 || t.degrees[i] > n)
            throw math_guard("Inconsistent", "character degree out of range");
        if (t.values[i][t.classes.class_of[0]] != t.degrees[i])
            throw math_guard("Inconsistent", "degree disagrees with the identity-class value");
        s += (int64_t)t.degrees[i] * t.degrees[i];
    }
    if (s != n) throw math_guard("Inconsistent", "sum of squared degrees != |G|");
    std::vector<int> inv_class(r);
    std::vector<int64_t> csize(r);
    for (int k = 0; k < r; ++k) {
        csize[k] = (int64_t)t.classes.members[k].size();
        inv_class[k] = t.classes.class_of[G.inv(t.classes.reps[k])];
    }
    Fl F{t.ell};
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            int64_t acc = 0;
            for (int k = 0; k < r; ++k)
                acc = F.add(acc, F.mul(F.mul(csize[k] % t.ell, t.values[a][k]),
                                       t.values[b][inv_class[k]]));
            int64_t expect = (a == b) ? n % t.ell : 0;
            if (acc != expect) throw math_guard("Inconsistent", "row orthogonality failed mod ell");
        }
}

CharacterTable dixon_character_table(const Group& G, int order_bound) {
    if (G.order > order_bound)
        throw invalid_input("OrderBoundExceeded", "group too large for character table");
    CharacterTable T;
    T.classes = element_classes(G);
    const int r = T.classes.size();
    const int n = G.order;

    int64_t ell = splitting_prime(G);
    T.ell = ell;
    Fl F{ell};

    // class-sum structure constants: M_i[j][k] = #{x in C_i : x^{-1} z_k in C_j}
    std::vector<std::vector<int64_t>> M(r, std::vector<int64_t>((size_t)r * r, 0));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            Elt zk = T.classes.reps[k];
            for (Elt x : T.classes.members[i]) {
                int j = T.classes.class_of[G.mult(G.inv(x), zk)];
                M[i][(size_t)j * r + k] += 1;
            }
        }

    // refine the full space into common eigenspaces
    std::vector<std::vector<std::vector<int64_t>>> spaces;
    {
        std::vector<std::vector<int64_t>> full;
        for (int i = 0; i < r; ++i) {
            std::vector<int64_t> v(r, 0);
            v[i] = 1;
            full.push_back(v);
        }
        spaces.push_back(full);
    }
    for (int i = 1; i < r; ++i) {
        std::vector<std::vector<std::vector<int64_t>>> next;
        for (auto& sp : spaces) {
            int m = (int)sp.size();
            if (m == 1) { next.push_back(sp); continue; }
            // action of M_i on the subspace: solve basis * A = M_i * basis
            // compute images
            std::vector<std::vector<int64_t>> img(m, std::vector<int64_t>(r, 0));
            for (int c = 0; c < m; ++c)
                for (int row = 0; row < r; ++row) {
                    int64_t s = 0;
                    for (int k = 0; k < r; ++k)
                        s = (s + M[i][(size_t)row * r + k] % ell * sp[c][k]) % ell;
                    img[c][row] = s;
                }
            // express img[c] in terms of sp columns: gaussian solve mod ell
            // build augmented [B | img...]
            int cols = m + m;
            std::vector<int64_t> Aug((size_t)r * cols, 0);
            for (int row = 0; row < r; ++row) {
                for (int c = 0; c < m; ++c) Aug[(size_t)row * cols + c] = sp[c][row];
                for (int c = 0; c < m; ++c) Aug[(size_t)row * cols + m + c] = img[c][row];
            }
            // RREF on first m columns
            int rr = 0;
            std::vector<int> pivrow(m, -1);
            for (int c = 0; c < m && rr < r; ++c) {
                int pr = -1;
                for (int row = rr; row < r; ++row)
                    if (Aug[(size_t)row * cols + c]) { pr = row; break; }
                if (pr < 0) throw math_guard("Inconsistent", "subspace basis degenerate");
                for (int j = 0; j < cols; ++j) std::swap(Aug[(size_t)pr * cols + j], Aug[(size_t)rr * cols + j]);
                int64_t iv = F.inv(Aug[(size_t)rr * cols + c]);
                for (int j = 0; j < cols; ++j) Aug[(size_t)rr * cols + j] = F.mul(Aug[(size_t)rr * cols + j], iv);
                for (int row = 0; row < r; ++row) {
                    if (row == rr) continue;
                    int64_t f = Aug[(size_t)row * cols + c];
                    if (!f) continue;
                    for (int j = 0; j < cols; ++j)
                        Aug[(size_t)row * cols + j] =
                            F.sub(Aug[(size_t)row * cols + j], F.mul(f, Aug[(size_t)rr * cols + j]));
                }
                pivrow[c] = rr;
                ++rr;
            }
            // action matrix A (m x m): A[row][c] = coefficient of basis row in img c
            std::vector<int64_t> act((size_t)m * m, 0);
            for (int c = 0; c < m; ++c)
                for (int b = 0; b < m; ++b) act[(size_t)b * m + c] = Aug[(size_t)pivrow[b] * cols + m + c];
            // eigenvalues: scan candidates (roots of det(act - x)) over F_ell
            std::vector<int64_t> lambdas;
            for (int64_t lam = 0; lam < ell; ++lam) {
                std::vector<int64_t> tmp = act;
                for (int d = 0; d < m; ++d)
                    tmp[(size_t)d * m + d] = F.sub(tmp[(size_t)d * m + d], lam);
                if (det_mod(tmp, m, ell) == 0) lambdas.push_back(lam);
                if ((int)lambdas.size() == m) break;
            }
            if (lambdas.size() <= 1) { next.push_back(sp); continue; }
            for (int64_t lam : lambdas) {
                auto sub = eigen_in_subspace(act, m, sp, lam, F);
                if (!sub.empty()) next.push_back(sub);
            }
        }
        spaces = std::move(next);
        bool all1 = true;
        for (auto& sp : spaces) all1 = all1 && sp.size() == 1;
        if (all1) break;
    }
    if ((int)spaces.size() != r)
        throw math_guard("Inconsistent", "class algebra did not split into r eigenlines");

    // each line gives omega values; normalize omega(identity class) = 1
    std::vector<int> id_class(r);
    std::vector<int> inv_class(r);
    std::vector<int64_t> csize(r);
    for (int k = 0; k < r; ++k) {
        csize[k] = (int64_t)T.classes.members[k].size();
        inv_class[k] = T.classes.class_of[G.inv(T.classes.reps[k])];
    }
    int idc = T.classes.class_of[0];

    for (auto& sp : spaces) {
        std::vector<int64_t> w = sp[0];
        if (w[idc] == 0) throw math_guard("Inconsistent", "eigenline vanishes at identity class");
        int64_t scale = F.inv(w[idc]);
        for (auto& x : w) x = F.mul(x, scale);
        // 1/d^2 = (1/|G|) sum_k w_k w_{k'} / |C_k|
        int64_t s = 0;
        for (int k = 0; k < r; ++k)
            s = F.add(s, F.mul(F.mul(w[k], w[inv_class[k]]), F.inv(csize[k] % ell)));
        s = F.mul(s, F.inv(n % ell));
        if (s == 0) throw math_guard("Inconsistent", "degree formula degenerate");
        int64_t d2 = F.inv(s);
        int deg = -1;
        for (int d = 1; (int64_t)d * d <= 2 * d2 && d <= n; ++d)
            if ((int64_t)d * d % ell == d2) { deg = d; break; }
        if (deg < 0) throw math_guard("Inconsistent", "degree lift failed");
        std::vector<int64_t> chi(r);
        for (int k = 0; k < r; ++k) chi[k] = F.mul(F.mul(w[k], deg), F.inv(csize[k] % ell));
        T.degrees.push_back(deg);
        T.values.push_back(std::move(chi));
    }

    // deterministic character order: by degree, then by value vector
    std::vector<int> ord(r);
    for (int i = 0; i < r; ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
        if (T.degrees[a] != T.degrees[b]) return T.degrees[a] < T.degrees[b];
        return T.values[a] < T.values[b];
    });
    {
        std::vector<int> dg;
        std::vector<std::vector<int64_t>> vv;
        for (int i : ord) {
            dg.push_back(T.degrees[i]);
            vv.push_back(T.values[i]);
        }
        T.degrees = std::move(dg);
        T.values = std::move(vv);
    }

    validate_table(G, T);
    return T;
}

int frobenius_schur(const Group& G, const CharacterTable& t, int chi) {
    int64_t ell = t.ell;
    int64_t s = 0;
    for (Elt g = 0; g < G.order; ++g) {
        Elt g2 = G.mult(g, g);
        s = (s + t.value(chi, g2)) % ell;
    }
    s = s * pw(G.order % ell, ell - 2, ell) % ell;
    if (s == 0) return 0;
    if (s == 1) return 1;
    if (s == ell - 1) return -1;
    throw math_guard("LiftAmbiguity", "Frobenius-Schur indicator not in {-1,0,1}");
}

int64_t fixed_dim(const Group& G, const CharacterTable& t, int chi, const Subgroup& H) {
    int64_t ell = t.ell;
    int64_t s = 0;
    for (Elt h : H.elems) s = (s + t.value(chi, h)) % ell;
    s = s * pw(H.order() % ell, ell - 2, ell) % ell;
    if (s > 2 * G.order)
        throw math_guard("LiftOutOfRange", "fixed-space dimension lift exceeds 2|G|");
    return s;
}

DimensionBasis real_dimension_functions(const Group& G, const CharacterTable& t,
                                        const SubgroupClassTable& tab) {
    DimensionBasis out;
    int nc = tab.num_classes();
    std::set<std::vector<int64_t>> seen;
    for (int chi = 0; chi < t.num_chars(); ++chi) {
        int nu = frobenius_schur(G, t, chi);
        std::vector<int64_t> f(nc);
        for (int c = 0; c < nc; ++c) {
            const Subgroup& H = tab.classes[c].rep;
            if (nu == 1) {
                f[c] = fixed_dim(G, t, chi, H);
            } else if (nu == -1) {
                f[c] = 2 * fixed_dim(G, t, chi, H);
            } else {
                // chi + conjugate: conj value at g is value at g^{-1}
                int64_t ell = t.ell;
                int64_t s = 0;
                for (Elt h : H.elems)
                    s = (s + t.value(chi, h) + t.value(chi, G.inv(h))) % ell;
                s = s * pw(H.order() % ell, ell - 2, ell) % ell;
                if (s > 2 * G.order)
                    throw math_guard("LiftOutOfRange", "fixed-space dimension lift exceeds 2|G|");
                f[c] = s;
            }
        }
        if (seen.insert(f).second) out.funcs.push_back(std::move(f));
    }
    std::sort(out.funcs.begin(), out.funcs.end(), [](const auto& a, const auto& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        return a < b;
    });
    // NB: class 0 is the trivial subgroup (smallest key), so funcs[i][0] = dim V
    for (int i = 0; i < (int)out.funcs.size(); ++i) {
        bool all1 = true;
        for (int64_t v : out.funcs[i]) all1 = all1 && v == 1;
        if (all1) { out.trivial_index = i; break; }
    }
    if (out.trivial_index < 0)
        throw math_guard("Inconsistent", "trivial dimension function missing from basis");
    return out;
}

} // namespace ttk
