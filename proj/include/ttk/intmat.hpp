#pragma once

#include <cstdint>
#include <vector>

namespace ttk {

// Exact integer matrices for the superclass-function lattices. Entries stay
// small at desk scale (bounded by group orders and their products during
// elimination), int64 with an overflow guard is enough.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<int64_t> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

    int64_t& at(int r, int c) { return a[(size_t)r * cols + c]; }
    int64_t at(int r, int c) const { return a[(size_t)r * cols + c]; }

    static IntMat identity(int n);
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Column-style Hermite normal form of the lattice spanned by the columns of
// M: zero columns dropped, pivot entries positive, entries right of a pivot
// zero, entries left of a pivot reduced into [0, pivot). Unique per lattice.
IntMat hnf(const IntMat& M);

// hnf plus a unimodular U with M*U column-equivalent to the returned form
// before dropping zero columns; zero_cols receives the indices (in M*U) of
// the zero columns, whose U-columns span ker_Z(M).
IntMat hnf_transform(const IntMat& M, IntMat& U, std::vector<int>& zero_cols);

// Basis of the integer kernel {x : M x = 0}, one column per basis vector.
IntMat int_kernel(const IntMat& M);

// Smith normal form; the diagonal is a divisibility chain of non-negative
// integers and the form is the diagonal matrix of M's shape.
std::vector<int64_t> snf_diagonal(const IntMat& M);

struct SnfResult {
    IntMat form;
    std::vector<int64_t> diagonal;
};
SnfResult snf(const IntMat& M);

int int_rank(const IntMat& M);

// true iff the columns of A and B span the same integer lattice.
bool same_lattice(const IntMat& A, const IntMat& B);

} // namespace ttk
