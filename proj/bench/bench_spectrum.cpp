// SPDX-License-Identifier: Apache-2.0
//
// Serial reference vs OpenMP spectrum enumeration. Usage:
//   bcross_bench [R] [count] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef BCROSS_HAVE_OPENMP
#include <omp.h>
#endif

#include "bcross/pleijel.hpp"

namespace {

template <class F>
double best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (t < best) best = t;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const double R = argc > 1 ? std::atof(argv[1]) : 2.0;
    const int count = argc > 2 ? std::atoi(argv[2]) : 20000;
    const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;

#ifdef BCROSS_HAVE_OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif

    std::vector<bcross::SpectrumEntry> serial, parallel;
    const double ts = best_of(repeats, [&] { serial = bcross::enumerate_spectrum_serial(R, count); });
    const double tp = best_of(repeats, [&] { parallel = bcross::enumerate_spectrum(R, count); });

    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i) {
        same = serial[i].nu == parallel[i].nu && serial[i].n == parallel[i].n &&
               serial[i].eigenvalue == parallel[i].eigenvalue;
    }

    std::printf("R=%g count=%d threads=%d repeats=%d\n", R, count, threads, repeats);
    std::printf("%-10s %12s\n", "kernel", "best_s");
    std::printf("%-10s %12.4f\n", "serial", ts);
    std::printf("%-10s %12.4f\n", "openmp", tp);
    std::printf("speedup %.2fx, results identical: %s\n", ts / tp, same ? "yes" : "no");
    return same ? 0 : 1;
}
