// Times the serial reference paths against the OpenMP kernels: the d^2 sweep
// over cobar basis trees and the elimination kernel behind rank/homology.
#include <chrono>
#include <cstdio>
#include <random>

#include "dainf/cobar.hpp"
#include "dainf/homology.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace dainf;

namespace {

double seconds(void (*fn)(bool), bool parallel) {
    auto t0 = std::chrono::steady_clock::now();
    fn(parallel);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void run_d2(bool parallel) {
    D2Report rep = check_d_squared(4, 4, parallel);
    if (!rep.ok) std::printf("d2 sweep FAILED\n");
}

void run_rank(bool parallel) {
    std::mt19937_64 rng(42);
    const CoefficientRing f5 = CoefficientRing::Fp(5);
    const int n = 420;
    DenseMat m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = Scalar::of(f5, static_cast<long long>(rng() % 5));
    (void)rank(m, f5, parallel);
}

void run_window(bool parallel) {
    (void)homology_window(4, 3, CoefficientRing::Q(), parallel);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n");
#endif
    struct Row {
        const char* name;
        void (*fn)(bool);
    } rows[] = {
        {"d2 sweep (arity<=4, h<=4)", run_d2},
        {"rank 420x420 over F5", run_rank},
        {"koszul window (4,3) over Q", run_window},
    };
    std::printf("%-30s %12s %12s %8s\n", "kernel", "serial [s]", "parallel [s]", "speedup");
    for (const auto& row : rows) {
        double s = seconds(row.fn, false);
        double p = seconds(row.fn, true);
        std::printf("%-30s %12.3f %12.3f %7.2fx\n", row.name, s, p, p > 0 ? s / p : 0.0);
    }
    return 0;
}
