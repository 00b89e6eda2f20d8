#include "ttk/resolution.hpp"

#include "ttk/error.hpp"

#include <algorithm>

namespace ttk {

std::vector<int> MinResolution::apply_diff(int i, const std::vector<int>& v) const {
    const int n = W->order;
    std::vector<int> out(dim(i - 1), 0);
    for (int j = 0; j < ranks[i]; ++j)
        for (Elt w = 0; w < n; ++w) {
            int c = v[j * n + w];
            if (!c) continue;
            // d(w * gen_j) = w * d(gen_j)
            const auto& img = diff[i][j];
            for (int jj = 0; jj < ranks[i - 1]; ++jj)
                for (Elt u = 0; u < n; ++u) {
                    int cc = img[jj * n + u];
                    if (!cc) continue;
                    int& slot = out[jj * n + W->mult(w, u)];
                    slot = (slot + c * cc) % p;
                }
        }
    return out;
}

std::vector<int> MinResolution::act(int i, Elt w, const std::vector<int>& v) const {
    const int n = W->order;
    std::vector<int> out(dim(i), 0);
    for (int j = 0; j < ranks[i]; ++j)
        for (Elt u = 0; u < n; ++u)
            if (v[j * n + u]) out[j * n + W->mult(w, u)] = v[j * n + u];
    return out;
}

MinResolution min_resolution(const GroupPtr& Wp, int d_max) {
    const Group& W = *Wp;
    const int n = W.order;
    const int p = W.prime;
    MinResolution R;
    R.W = Wp;
    R.p = p;
    R.ranks.push_back(1);
    R.diff.emplace_back(); // unused slot for i = 0

    // current kernel: of the augmentation for the first step
    FpMat cur(1, n, p);
    for (int j = 0; j < n; ++j) cur.at(0, j) = 1; // aug on P_0 = kW

    int prev_rank = 1;
    for (int i = 1; i <= d_max; ++i) {
        FpMat K = kernel_basis(cur); // columns = kernel vectors in P_{i-1}
        int kd = K.cols;
        int prev_dim = prev_rank * n;
        // rad*K = span{(w-1)v : v kernel basis, w generators}
        FpMat radK(prev_dim, kd * std::max(1, (int)W.generators.size()), p);
        int col = 0;
        for (int c = 0; c < kd; ++c) {
            std::vector<int> v(prev_dim);
            for (int r = 0; r < prev_dim; ++r) v[r] = K.at(r, c);
            for (Elt g : W.generators) {
                for (int j = 0; j < prev_rank; ++j)
                    for (Elt u = 0; u < n; ++u) {
                        int val = v[j * n + u];
                        if (!val) continue;
                        int& a = radK.at(j * n + W.mult(g, u), col);
                        a = (a + val) % p;
                        int& b = radK.at(j * n + u, col);
                        b = (b - val % p + p) % p;
                    }
                ++col;
            }
        }
        // minimal generators: kernel vectors extending a basis of rad*K
        FpMat span = column_space(radK);
        std::vector<std::vector<int>> gens;
        int cur_rank = rank(span);
        FpMat acc(prev_dim, span.cols + kd, p);
        for (int r = 0; r < prev_dim; ++r)
            for (int c = 0; c < span.cols; ++c) acc.at(r, c) = span.at(r, c);
        int used = span.cols;
        for (int c = 0; c < kd; ++c) {
            for (int r = 0; r < prev_dim; ++r) acc.at(r, used) = K.at(r, c);
            FpMat test(prev_dim, used + 1, p);
            for (int r = 0; r < prev_dim; ++r)
                for (int cc = 0; cc <= used; ++cc) test.at(r, cc) = acc.at(r, cc);
            if (rank(test) > cur_rank) {
                ++cur_rank;
                ++used;
                std::vector<int> v(prev_dim);
                for (int r = 0; r < prev_dim; ++r) v[r] = K.at(r, c);
                gens.push_back(std::move(v));
            }
        }
        int rk = (int)gens.size();
        R.ranks.push_back(rk);
        R.diff.push_back(gens);
        if (rk == 0) break; // resolution terminated (trivial group)

        // next boundary matrix: P_i -> P_{i-1} densely
        FpMat D(prev_dim, rk * n, p);
        for (int j = 0; j < rk; ++j)
            for (Elt w = 0; w < n; ++w) {
                // column = w * gens[j]
                for (int jj = 0; jj < prev_rank; ++jj)
                    for (Elt u = 0; u < n; ++u) {
                        int val = gens[j][jj * n + u];
                        if (val) D.at(jj * n + W.mult(w, u), j * n + w) = val;
                    }
            }
        cur = std::move(D);
        prev_rank = rk;
    }
    return R;
}

bool CohomologyClass::is_zero() const {
    for (int v : vec)
        if (v) return false;
    return true;
}

CohomologyClass yoneda_product(const MinResolution& R, const CohomologyClass& a,
                               const CohomologyClass& b) {
    const int p = R.p;
    const int n = R.W->order;
    if (a.degree < 0 || b.degree < 0 || a.is_zero() || b.is_zero())
        return CohomologyClass{R.W, std::max(a.degree + b.degree, 0), {}};
    int alpha = a.degree, beta = b.degree;
    if (alpha + beta > R.length())
        throw invalid_input("ShapeMismatch", "resolution too short for Yoneda product");

    // lift b to Phi_i : P_i -> P_{i-beta}, i = beta..alpha+beta, with
    // eps(Phi_beta) = b; the class of the composite is independent of choices
    std::vector<std::vector<std::vector<int>>> Phi; // per level, per generator, dense in P_{i-beta}
    {
        std::vector<std::vector<int>> lv(R.ranks[beta], std::vector<int>(R.dim(0), 0));
        for (int j = 0; j < R.ranks[beta]; ++j)
            if (j < (int)b.vec.size() && b.vec[j]) lv[j][0] = ((b.vec[j] % p) + p) % p;
        Phi.push_back(std::move(lv));
    }
    for (int i = beta + 1; i <= alpha + beta; ++i) {
        int lvl = i - beta; // target P_lvl
        int sdim = R.dim(lvl - 1);
        FpMat D(sdim, R.dim(lvl), p);
        for (int j = 0; j < R.ranks[lvl]; ++j)
            for (Elt w = 0; w < n; ++w) {
                std::vector<int> e(R.dim(lvl), 0);
                e[j * n + w] = 1;
                auto img = R.apply_diff(lvl, e);
                for (int r = 0; r < sdim; ++r) D.at(r, j * n + w) = img[r];
            }
        std::vector<std::vector<int>> lv;
        for (int j = 0; j < R.ranks[i]; ++j) {
            std::vector<int> rhs(sdim, 0);
            const auto& img = R.diff[i][j]; // d_i(gen_j) in P_{i-1}
            const auto& prev = Phi.back();  // Phi_{i-1}: generators of P_{i-1} -> P_{lvl-1}
            for (int jj = 0; jj < R.ranks[i - 1]; ++jj)
                for (Elt u = 0; u < n; ++u) {
                    int c = img[jj * n + u];
                    if (!c) continue;
                    auto moved = R.act(lvl - 1, u, prev[jj]);
                    for (int r = 0; r < sdim; ++r) rhs[r] = (rhs[r] + c * moved[r]) % p;
                }
            auto sol = solve(D, rhs);
            if (!sol) throw math_guard("LiftFailure", "Yoneda lift failed (resolution not exact?)");
            lv.push_back(*sol);
        }
        Phi.push_back(std::move(lv));
    }

    // compose with a: (a cup b)(gen_j of P_{alpha+beta}) = a(Phi_top(gen_j))
    CohomologyClass out{R.W, alpha + beta, std::vector<int>(R.ranks[alpha + beta], 0)};
    const auto& top = Phi.back();
    for (int j = 0; j < R.ranks[alpha + beta]; ++j) {
        int64_t s = 0;
        for (int jj = 0; jj < R.ranks[alpha]; ++jj) {
            if (jj >= (int)a.vec.size() || !a.vec[jj]) continue;
            int64_t colsum = 0;
            for (Elt w = 0; w < n; ++w) colsum += top[j][jj * n + w];
            s += (int64_t)a.vec[jj] * colsum;
        }
        out.vec[j] = (int)(((s % p) + p) % p);
    }
    return out;
}

} // namespace ttk
