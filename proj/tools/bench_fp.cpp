// Benchmark: OpenMP elimination kernel vs the serial reference, on random
// dense matrices over F_p. Verifies both kernels agree before timing.

#include "ttk/fp.hpp"

#include <chrono>
#include <cstdio>
#include <random>

using namespace ttk;

namespace {

FpMat random_matrix(int n, int m, int p, uint32_t seed) {
    FpMat M(n, m, p);
    std::mt19937 rng(seed);
    for (auto& x : M.a) x = (int32_t)(rng() % p);
    return M;
}

double time_ms(void (*fn)(FpMat&), FpMat M) {
    auto t0 = std::chrono::steady_clock::now();
    fn(M);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void run_parallel(FpMat& M) { rref_inplace(M); }
void run_serial(FpMat& M) { rref_serial(M); }

} // namespace

int main(int argc, char** argv) {
    int n = (argc > 1) ? std::atoi(argv[1]) : 1200;
    int p = (argc > 2) ? std::atoi(argv[2]) : 3;
    std::printf("rref over F_%d, %d x %d\n", p, n, n);

    FpMat M = random_matrix(n, n, p, 42);
    FpMat A = M, B = M;
    rref_inplace(A);
    rref_serial(B);
    if (!(A == B)) {
        std::printf("MISMATCH between parallel and serial kernels\n");
        return 1;
    }
    std::printf("kernels agree\n");

    for (int rep = 0; rep < 3; ++rep) {
        double ts = time_ms(run_serial, M);
        double tp = time_ms(run_parallel, M);
        std::printf("run %d: serial %.1f ms, openmp %.1f ms, speedup %.2fx\n", rep, ts, tp,
                    ts / tp);
    }
    return 0;
}
