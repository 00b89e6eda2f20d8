#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ttk {

// Dense matrix over the prime field F_p (p a runtime prime, entries reduced).
// All algorithms are plain Gaussian elimination; desk-scale dimensions.
// The row-update loop of the elimination kernel is OpenMP-parallel above a
// size threshold; rref_serial is the reference implementation the tests and
// the benchmark compare against.
struct FpMat {
    int rows = 0;
    int cols = 0;
    int p = 2;
    std::vector<int32_t> a; // row-major, rows*cols entries in [0, p)

    FpMat() = default;
    FpMat(int r, int c, int prime) : rows(r), cols(c), p(prime), a((size_t)r * c, 0) {}

    int32_t& at(int r, int c) { return a[(size_t)r * cols + c]; }
    int32_t at(int r, int c) const { return a[(size_t)r * cols + c]; }

    static FpMat identity(int n, int prime);
    bool operator==(const FpMat& o) const { return rows == o.rows && cols == o.cols && p == o.p && a == o.a; }
};

int fp_inv(int x, int p);

FpMat fp_mul(const FpMat& A, const FpMat& B);
std::vector<int> fp_apply(const FpMat& A, const std::vector<int>& v);

// In-place reduced row echelon form; returns pivot column list.
std::vector<int> rref_inplace(FpMat& M);
// Serial reference kernel with the same contract (no OpenMP).
std::vector<int> rref_serial(FpMat& M);

int rank(const FpMat& M);
// Columns span ker(M) exactly; cols(result) = cols(M) - rank(M).
FpMat kernel_basis(const FpMat& M);
// First solution of M x = b (free variables set to 0), if consistent.
std::optional<std::vector<int>> solve(const FpMat& M, const std::vector<int>& b);

// Basis of the column span of M (as columns of the result).
FpMat column_space(const FpMat& M);
// dim(span(A) cap span(B)) for column spans.
int intersection_dim(const FpMat& A, const FpMat& B);
// true iff v lies in the column span of M.
bool in_span(const FpMat& M, const std::vector<int>& v);

} // namespace ttk
