// Timing harness for the two enumeration kernels: the plain matrix-walk
// reference and the parallel weighted walk.  Both totals are printed so a
// disagreement is visible right next to the speedup figure.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "icekernel/bruteforce.hpp"
#include "icekernel/spectral.hpp"

namespace {

template <class Fn>
double time_best_of(int reps, const Fn& fn, double& result) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        result = fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int max_order = argc > 1 ? std::atoi(argv[1]) : 7;
#ifdef _OPENMP
    if (const char* threads = std::getenv("ICEKERNEL_THREADS")) {
        const int k = std::atoi(threads);
        if (k > 0) omp_set_num_threads(k);
    }
    std::printf("parallel walk uses up to %d threads\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both kernels run serially\n");
#endif

    std::mt19937_64 rng(4242);
    for (int n = 5; n <= max_order && n <= 8; ++n) {
        const icekernel::SpectralConfig cfg =
            icekernel::random_admissible(n, icekernel::kCriticalEta, rng, 0.01);
        const int reps = n <= 6 ? 5 : 2;

        double ref_val = 0.0, walk_val = 0.0;
        const double t_ref = time_best_of(
            reps, [&] { return icekernel::partition_bruteforce_reference(cfg, 8); }, ref_val);
        const double t_walk = time_best_of(
            reps, [&] { return icekernel::partition_bruteforce(cfg, 8); }, walk_val);

        std::printf("order %d: reference %.4fs  walk %.4fs  speedup %.2fx  "
                    "values %.12g / %.12g (rel diff %.2e)\n",
                    n, t_ref, t_walk, t_ref / t_walk, ref_val, walk_val,
                    std::abs(ref_val - walk_val) /
                        std::max(1e-300, std::abs(ref_val)));
    }
    return 0;
}
