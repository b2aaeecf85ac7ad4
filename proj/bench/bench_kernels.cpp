// Timings of the OpenMP kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "scarmat/dense.hpp"
#include "scarmat/torus_hilbert.hpp"

using namespace scarmat;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

CMatrix random_matrix(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMatrix A(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) A(r, c) = cplx(u(rng), u(rng));
    return A;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled\n");
#endif

    std::mt19937 rng(7);
    std::printf("%-22s %10s %10s %9s %12s\n", "kernel", "serial ms", "omp ms", "speedup",
                "max |diff|");

    for (int n : {128, 256, 512}) {
        CMatrix A = random_matrix(n, rng), B = random_matrix(n, rng);
        auto t0 = clk::now();
        CMatrix Cs = dense::matmul_serial(A, B);
        double ts = ms_since(t0);
        t0 = clk::now();
        CMatrix Cp = dense::matmul(A, B);
        double tp = ms_since(t0);
        std::printf("matmul n=%-13d %10.2f %10.2f %8.2fx %12.3e\n", n, ts, tp, ts / tp,
                    dense::max_abs_diff(Cs, Cp));
    }

    for (int n : {101, 201}) {
        TorusHilbert h(n);
        CMatrix U = cat_propagator(h);
        auto t0 = clk::now();
        auto Ws = weyl_symbol_serial(h, U);
        double ts = ms_since(t0);
        t0 = clk::now();
        auto Wp = weyl_symbol(h, U);
        double tp = ms_since(t0);
        double diff = 0;
        for (size_t i = 0; i < Ws.size(); ++i) diff = std::fmax(diff, std::abs(Ws[i] - Wp[i]));
        std::printf("weyl_symbol N=%-10d %10.2f %10.2f %8.2fx %12.3e\n", n, ts, tp, ts / tp,
                    diff);
    }
    return 0;
}
