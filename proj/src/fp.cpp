#include "ttk/fp.hpp"

#include "ttk/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ttk {

FpMat FpMat::identity(int n, int prime) {
    FpMat I(n, n, prime);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

int fp_inv(int x, int p) {
    x %= p;
    if (x < 0) x += p;
    if (x == 0) throw math_guard("PivotInversionFailure", "zero has no inverse mod p");
    // extended Euclid
    int a = x, b = p, u = 1, v = 0;
    while (b) {
        int q = a / b;
        a -= q * b; std::swap(a, b);
        u -= q * v; std::swap(u, v);
    }
    u %= p;
    if (u < 0) u += p;
    return u;
}

FpMat fp_mul(const FpMat& A, const FpMat& B) {
    if (A.cols != B.rows || A.p != B.p)
        throw invalid_input("ShapeMismatch", "fp_mul dimension/modulus mismatch");
    FpMat C(A.rows, B.cols, A.p);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            int64_t aik = A.at(i, k);
            if (!aik) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = (int32_t)((C.at(i, j) + aik * B.at(k, j)) % A.p);
        }
    return C;
}

std::vector<int> fp_apply(const FpMat& A, const std::vector<int>& v) {
    if ((int)v.size() != A.cols) throw invalid_input("ShapeMismatch", "fp_apply vector length");
    std::vector<int> out(A.rows, 0);
    for (int i = 0; i < A.rows; ++i) {
        int64_t s = 0;
        for (int j = 0; j < A.cols; ++j) s += (int64_t)A.at(i, j) * v[j];
        out[i] = (int)(s % A.p);
    }
    return out;
}

namespace {

// Shared elimination body. `parallel` toggles the OpenMP row-update loop.
std::vector<int> rref_impl(FpMat& M, bool parallel) {
    const int p = M.p;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int piv = -1;
        for (int i = r; i < M.rows; ++i)
            if (M.at(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
        int inv = fp_inv(M.at(r, c), p);
        if (inv != 1)
            for (int j = c; j < M.cols; ++j) M.at(r, j) = (int32_t)((int64_t)M.at(r, j) * inv % p);
        const int width = M.cols - c;
        const bool big = parallel && (int64_t)M.rows * width > 65536;
#pragma omp parallel for schedule(static) if (big)
        for (int i = 0; i < M.rows; ++i) {
            if (i == r) continue;
            int64_t f = M.at(i, c);
            if (!f) continue;
            f = p - f;
            for (int j = c; j < M.cols; ++j)
                M.at(i, j) = (int32_t)((M.at(i, j) + f * M.at(r, j)) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::vector<int> rref_inplace(FpMat& M) { return rref_impl(M, true); }
std::vector<int> rref_serial(FpMat& M) { return rref_impl(M, false); }

int rank(const FpMat& M) {
    FpMat T = M;
    return (int)rref_inplace(T).size();
}

FpMat kernel_basis(const FpMat& M) {
    FpMat T = M;
    std::vector<int> piv = rref_inplace(T);
    std::vector<bool> is_piv(M.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < M.cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    FpMat K(M.cols, (int)free_cols.size(), M.p);
    for (int j = 0; j < (int)free_cols.size(); ++j) {
        int fc = free_cols[j];
        K.at(fc, j) = 1;
        for (int i = 0; i < (int)piv.size(); ++i) {
            int v = T.at(i, fc);
            if (v) K.at(piv[i], j) = M.p - v;
        }
    }
    return K;
}

std::optional<std::vector<int>> solve(const FpMat& M, const std::vector<int>& b) {
    if ((int)b.size() != M.rows) throw invalid_input("ShapeMismatch", "solve rhs length");
    FpMat T(M.rows, M.cols + 1, M.p);
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) T.at(i, j) = M.at(i, j);
        int v = b[i] % M.p;
        if (v < 0) v += M.p;
        T.at(i, M.cols) = v;
    }
    std::vector<int> piv = rref_inplace(T);
    if (!piv.empty() && piv.back() == M.cols) return std::nullopt;
    std::vector<int> x(M.cols, 0);
    for (int i = 0; i < (int)piv.size(); ++i) x[piv[i]] = T.at(i, M.cols);
    return x;
}

FpMat column_space(const FpMat& M) {
    FpMat T = M;
    std::vector<int> piv = rref_inplace(T);
    FpMat B(M.rows, (int)piv.size(), M.p);
    for (int j = 0; j < (int)piv.size(); ++j)
        for (int i = 0; i < M.rows; ++i) B.at(i, j) = M.at(i, piv[j]);
    return B;
}

int intersection_dim(const FpMat& A, const FpMat& B) {
    if (A.rows != B.rows || A.p != B.p) throw invalid_input("ShapeMismatch", "intersection_dim");
    int ra = rank(A), rb = rank(B);
    FpMat C(A.rows, A.cols + B.cols, A.p);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
    }
    return ra + rb - rank(C);
}

bool in_span(const FpMat& M, const std::vector<int>& v) {
    return solve(M, v).has_value();
}

} // namespace ttk
