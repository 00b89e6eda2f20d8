#include "ttk/intmat.hpp"

#include "ttk/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace ttk {

IntMat IntMat::identity(int n) {
    IntMat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

namespace {

constexpr int64_t kOverflowBound = int64_t(1) << 58;

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void check_entry(int64_t v) {
    if (v > kOverflowBound || v < -kOverflowBound)
        throw math_guard("Inconsistent", "integer overflow guard tripped in lattice arithmetic");
}

void col_axpy(IntMat& M, int dst, int src, int64_t q) {
    if (!q) return;
    for (int i = 0; i < M.rows; ++i) {
        M.at(i, dst) -= q * M.at(i, src);
        check_entry(M.at(i, dst));
    }
}

void col_swap(IntMat& M, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < M.rows; ++r) std::swap(M.at(r, i), M.at(r, j));
}

void col_neg(IntMat& M, int j) {
    for (int r = 0; r < M.rows; ++r) M.at(r, j) = -M.at(r, j);
}

} // namespace

IntMat hnf_transform(const IntMat& M0, IntMat& U, std::vector<int>& zero_cols) {
    IntMat M = M0;
    U = IntMat::identity(M.cols);
    int c = 0;
    std::vector<int> pivot_rows;
    for (int r = 0; r < M.rows && c < M.cols; ++r) {
        // gcd elimination across columns c.. using row r
        for (;;) {
            int best = -1;
            for (int j = c; j < M.cols; ++j)
                if (M.at(r, j) != 0 && (best < 0 || std::llabs(M.at(r, j)) < std::llabs(M.at(r, best))))
                    best = j;
            if (best < 0) break;
            col_swap(M, c, best);
            col_swap(U, c, best);
            if (M.at(r, c) < 0) { col_neg(M, c); col_neg(U, c); }
            bool clean = true;
            for (int j = c + 1; j < M.cols; ++j) {
                if (!M.at(r, j)) continue;
                int64_t q = floor_div(M.at(r, j), M.at(r, c));
                col_axpy(M, j, c, q);
                col_axpy(U, j, c, q);
                if (M.at(r, j)) clean = false;
            }
            if (clean) break;
        }
        if (c < M.cols && M.at(r, c) != 0) {
            for (int j = 0; j < c; ++j) {
                int64_t q = floor_div(M.at(r, j), M.at(r, c));
                col_axpy(M, j, c, q);
                col_axpy(U, j, c, q);
            }
            pivot_rows.push_back(r);
            ++c;
        }
    }
    zero_cols.clear();
    for (int j = c; j < M.cols; ++j) zero_cols.push_back(j);
    return M;
}

IntMat hnf(const IntMat& M0) {
    IntMat U;
    std::vector<int> zc;
    IntMat H = hnf_transform(M0, U, zc);
    int keep = H.cols - (int)zc.size();
    IntMat R(H.rows, keep);
    for (int i = 0; i < H.rows; ++i)
        for (int j = 0; j < keep; ++j) R.at(i, j) = H.at(i, j);
    return R;
}

IntMat int_kernel(const IntMat& M) {
    IntMat U;
    std::vector<int> zc;
    hnf_transform(M, U, zc);
    IntMat K(M.cols, (int)zc.size());
    for (int j = 0; j < (int)zc.size(); ++j)
        for (int i = 0; i < M.cols; ++i) K.at(i, j) = U.at(i, zc[j]);
    return K;
}

int int_rank(const IntMat& M) { return hnf(M).cols; }

bool same_lattice(const IntMat& A, const IntMat& B) {
    if (A.rows != B.rows) return false;
    return hnf(A) == hnf(B);
}

std::vector<int64_t> snf_diagonal(const IntMat& M0) {
    IntMat M = M0;
    int n = std::min(M.rows, M.cols);
    std::vector<int64_t> diag;
    auto row_axpy = [&](int dst, int src, int64_t q) {
        if (!q) return;
        for (int j = 0; j < M.cols; ++j) {
            M.at(dst, j) -= q * M.at(src, j);
            check_entry(M.at(dst, j));
        }
    };
    for (int t = 0; t < n; ++t) {
        for (;;) {
            int bi = -1, bj = -1;
            for (int i = t; i < M.rows; ++i)
                for (int j = t; j < M.cols; ++j)
                    if (M.at(i, j) != 0 &&
                        (bi < 0 || std::llabs(M.at(i, j)) < std::llabs(M.at(bi, bj)))) {
                        bi = i; bj = j;
                    }
            if (bi < 0) { bi = bj = -1; break; }
            if (bi != t) for (int j = 0; j < M.cols; ++j) std::swap(M.at(t, j), M.at(bi, j));
            if (bj != t) col_swap(M, t, bj);
            if (M.at(t, t) < 0) for (int j = 0; j < M.cols; ++j) M.at(t, j) = -M.at(t, j);
            bool again = false;
            for (int i = t + 1; i < M.rows; ++i)
                if (M.at(i, t)) { row_axpy(i, t, floor_div(M.at(i, t), M.at(t, t))); if (M.at(i, t)) again = true; }
            for (int j = t + 1; j < M.cols; ++j)
                if (M.at(t, j)) { col_axpy(M, j, t, floor_div(M.at(t, j), M.at(t, t))); if (M.at(t, j)) again = true; }
            if (again) continue;
            // divisibility sweep
            bool fixed = true;
            for (int i = t + 1; i < M.rows && fixed; ++i)
                for (int j = t + 1; j < M.cols && fixed; ++j)
                    if (M.at(i, j) % M.at(t, t) != 0) {
                        row_axpy(t, i, -1); // add row i to row t, restart pivot
                        fixed = false;
                    }
            if (fixed) break;
        }
        diag.push_back(t < std::min(M.rows, M.cols) ? std::llabs(M.at(t, t)) : 0);
        if (M.at(t, t) == 0) break;
    }
    while ((int)diag.size() < n) diag.push_back(0);
    return diag;
}

SnfResult snf(const IntMat& M) {
    SnfResult r;
    r.diagonal = snf_diagonal(M);
    r.form = IntMat(M.rows, M.cols);
    for (int i = 0; i < (int)r.diagonal.size(); ++i) r.form.at(i, i) = r.diagonal[i];
    return r;
}

} // namespace ttk
